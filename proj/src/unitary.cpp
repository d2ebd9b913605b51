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

#include "qcost/unitary.hpp"

#include <cmath>

namespace qcost {

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  UnitaryMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

UnitaryMatrix UnitaryMatrix::multiply(const UnitaryMatrix& rhs) const {
  UnitaryMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex a = at(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  UnitaryMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = std::conj(at(i, j));
  return out;
}

bool UnitaryMatrix::is_unitary(double tol) const {
  return multiply(adjoint()).approx_equal(identity(dim_), tol);
}

bool UnitaryMatrix::approx_equal(const UnitaryMatrix& other, double tol) const {
  if (dim_ != other.dim_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (std::abs(entries_[i] - other.entries_[i]) > tol) return false;
  }
  return true;
}

bool UnitaryMatrix::equal_up_to_global_phase(const UnitaryMatrix& other,
                                             double tol) const {
  if (dim_ != other.dim_) return false;
  std::size_t pivot = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double mag = std::abs(entries_[i]);
    if (mag > best) {
      best = mag;
      pivot = i;
    }
  }
  if (best <= tol) return other.approx_equal(*this, tol);
  const Complex phase = other.entries_[pivot] / entries_[pivot];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (std::abs(phase * entries_[i] - other.entries_[i]) > tol) return false;
  }
  return true;
}

bool UnitaryMatrix::is_identity_up_to_phase(double tol) const {
  return equal_up_to_global_phase(identity(dim_), tol);
}

std::optional<std::vector<std::uint32_t>> UnitaryMatrix::as_permutation(
    double tol) const {
  std::vector<std::uint32_t> images(dim_);
  std::vector<bool> hit(dim_, false);
  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t one_row = dim_;
    for (std::size_t row = 0; row < dim_; ++row) {
      const Complex v = at(row, col);
      if (std::abs(v - Complex{1.0, 0.0}) <= tol) {
        if (one_row != dim_) return std::nullopt;
        one_row = row;
      } else if (std::abs(v) > tol) {
        return std::nullopt;
      }
    }
    if (one_row == dim_ || hit[one_row]) return std::nullopt;
    hit[one_row] = true;
    images[col] = static_cast<std::uint32_t>(one_row);
  }
  return images;
}

bool Permutation::is_bijection() const {
  std::vector<bool> hit(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

UnitaryMatrix Permutation::matrix() const {
  UnitaryMatrix m(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) m.at(images[x], x) = 1.0;
  return m;
}

}  // namespace qcost
