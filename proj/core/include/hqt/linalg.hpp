// Copyright 2026 The hybridqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "hqt/errors.hpp"

namespace hqt {

using Amplitude = std::complex<double>;

// Tolerance ladder used throughout: conservation laws, algebraic identities,
// and the cutoff below which a probability counts as zero.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kAlgebraTol = 1e-10;
inline constexpr double kProbFloor = 1e-14;

bool is_finite(const Amplitude& a);

// Square complex matrix; unitarity (U U† = I within 1e-10) is enforced when
// constructed through from_entries.
class UnitaryMatrix {
 public:
  static UnitaryMatrix from_entries(std::size_t dim, std::vector<Amplitude> entries);
  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Amplitude& at(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  const std::vector<Amplitude>& entries() const { return entries_; }

  UnitaryMatrix dagger() const;
  UnitaryMatrix negated() const;  // -U, still unitary

  friend UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b);
  friend UnitaryMatrix matmul(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  UnitaryMatrix(std::size_t dim, std::vector<Amplitude> entries);

  std::size_t dim_;
  std::vector<Amplitude> entries_;  // row-major
};

// True when a == e^{i phi} b for some phase, entrywise within tol.
bool approx_equal_up_to_phase(const UnitaryMatrix& a, const UnitaryMatrix& b,
                              double tol = kAlgebraTol);

// Complete orthonormal set: dim vectors of length dim. Gram identity
// <v_i|v_j> = delta_ij is checked within 1e-10 on construction.
class OrthonormalBasis {
 public:
  static OrthonormalBasis from_vectors(std::vector<std::vector<Amplitude>> vectors);
  static OrthonormalBasis computational(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }  // == dim()
  const std::vector<Amplitude>& vector(std::size_t i) const { return vectors_.at(i); }

 private:
  OrthonormalBasis(std::size_t dim, std::vector<std::vector<Amplitude>> vectors);

  std::size_t dim_;
  std::vector<std::vector<Amplitude>> vectors_;
};

}  // namespace hqt
