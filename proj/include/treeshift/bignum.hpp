// Copyright 2026 The treeshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Arbitrary-precision number types shared across modules.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace treeshift {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;

// Sets the default BigFloat precision for the lifetime of the object; new
// BigFloat values use it. The default is process-wide, so high-precision
// routines must not run concurrently with different precisions.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(bits_to_digits10(bits));
  }
  ~ScopedPrecision() { BigFloat::default_precision(saved_); }

  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  static unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 2;
  }

 private:
  unsigned saved_;
};

// Natural log of a positive big integer, accurate to double precision.
double log_of(const BigInt& value);

// Number of significant bits of |value| (0 for zero).
unsigned bit_length(const BigInt& value);

}  // namespace treeshift
