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

#include "treeshift/bignum.hpp"

#include <cmath>

namespace treeshift {

double log_of(const BigInt& value) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.backend().data());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

unsigned bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return static_cast<unsigned>(mpz_sizeinbase(value.backend().data(), 2));
}

}  // namespace treeshift
