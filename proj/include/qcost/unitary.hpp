// Copyright 2026 The qcost authors
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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcost/types.hpp"

namespace qcost {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Dimensions are powers of two and
/// stay small (at most 2^10), so everything is done the naive way.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Complex& at(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }
  const Complex& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  /// this * rhs (this applied after rhs).
  UnitaryMatrix multiply(const UnitaryMatrix& rhs) const;

  UnitaryMatrix adjoint() const;

  bool is_unitary(double tol = kTolerance) const;

  /// Entrywise |a-b| <= tol.
  bool approx_equal(const UnitaryMatrix& other, double tol = kTolerance) const;

  /// Equal after multiplying this by one global phase. The phase is read off
  /// the largest-magnitude entry.
  bool equal_up_to_global_phase(const UnitaryMatrix& other,
                                double tol = kTolerance) const;

  bool is_identity_up_to_phase(double tol = kTolerance) const;

  /// If every column is a basis vector with entry 1, returns the images
  /// (column j maps to the row holding the 1).
  std::optional<std::vector<std::uint32_t>> as_permutation(
      double tol = kTolerance) const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Bijection on basis-state indices [0, 2^n).
struct Permutation {
  std::vector<std::uint32_t> images;

  std::size_t size() const noexcept { return images.size(); }
  std::uint32_t apply(std::uint32_t x) const { return images[x]; }
  bool operator==(const Permutation& other) const = default;

  bool is_bijection() const;

  /// The 0/1 matrix with entry (images[x], x) = 1.
  UnitaryMatrix matrix() const;
};

}  // namespace qcost
