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

#include "hqt/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace hqt {

bool is_finite(const Amplitude& a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

UnitaryMatrix::UnitaryMatrix(std::size_t dim, std::vector<Amplitude> entries)
    : dim_(dim), entries_(std::move(entries)) {}

UnitaryMatrix UnitaryMatrix::from_entries(std::size_t dim, std::vector<Amplitude> entries) {
  if (dim == 0 || entries.size() != dim * dim)
    throw DimensionMismatch("matrix entries do not form a " + std::to_string(dim) + "x" +
                            std::to_string(dim) + " square");
  for (const Amplitude& e : entries)
    if (!is_finite(e)) throw InvariantViolation("matrix entry is not finite");
  UnitaryMatrix u(dim, std::move(entries));
  // check U U† = I within the algebraic tolerance
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Amplitude sum = 0.0;
      for (std::size_t k = 0; k < dim; ++k) sum += u.at(r, k) * std::conj(u.at(c, k));
      const Amplitude expect = (r == c) ? 1.0 : 0.0;
      if (std::abs(sum - expect) > kAlgebraTol)
        throw InvariantViolation("matrix is not unitary");
    }
  }
  return u;
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  std::vector<Amplitude> e(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return UnitaryMatrix(dim, std::move(e));
}

UnitaryMatrix UnitaryMatrix::dagger() const {
  std::vector<Amplitude> e(dim_ * dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) e[c * dim_ + r] = std::conj(at(r, c));
  return UnitaryMatrix(dim_, std::move(e));
}

UnitaryMatrix UnitaryMatrix::negated() const {
  std::vector<Amplitude> e(entries_);
  for (Amplitude& x : e) x = -x;
  return UnitaryMatrix(dim_, std::move(e));
}

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da * db;
  std::vector<Amplitude> e(d * d);
  for (std::size_t ra = 0; ra < da; ++ra)
    for (std::size_t ca = 0; ca < da; ++ca)
      for (std::size_t rb = 0; rb < db; ++rb)
        for (std::size_t cb = 0; cb < db; ++cb)
          e[(ra * db + rb) * d + (ca * db + cb)] = a.at(ra, ca) * b.at(rb, cb);
  return UnitaryMatrix(d, std::move(e));
}

UnitaryMatrix matmul(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix product dimensions differ");
  const std::size_t d = a.dim();
  std::vector<Amplitude> e(d * d, 0.0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t c = 0; c < d; ++c) e[r * d + c] += a.at(r, k) * b.at(k, c);
  return UnitaryMatrix(d, std::move(e));
}

bool approx_equal_up_to_phase(const UnitaryMatrix& a, const UnitaryMatrix& b, double tol) {
  if (a.dim() != b.dim()) return false;
  // pin the phase at b's largest entry, then compare entrywise
  std::size_t best = 0;
  double best_mag = 0.0;
  for (std::size_t i = 0; i < b.entries().size(); ++i) {
    const double m = std::abs(b.entries()[i]);
    if (m > best_mag) {
      best_mag = m;
      best = i;
    }
  }
  if (best_mag < tol) return false;
  const Amplitude lambda = a.entries()[best] / b.entries()[best];
  if (std::abs(std::abs(lambda) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < b.entries().size(); ++i)
    if (std::abs(a.entries()[i] - lambda * b.entries()[i]) > tol) return false;
  return true;
}

OrthonormalBasis::OrthonormalBasis(std::size_t dim, std::vector<std::vector<Amplitude>> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {}

OrthonormalBasis OrthonormalBasis::from_vectors(std::vector<std::vector<Amplitude>> vectors) {
  const std::size_t dim = vectors.size();
  if (dim == 0) throw DimensionMismatch("basis needs at least one vector");
  for (const auto& v : vectors) {
    if (v.size() != dim)
      throw DimensionMismatch("basis vector length differs from basis size");
    for (const Amplitude& e : v)
      if (!is_finite(e)) throw InvariantViolation("basis entry is not finite");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Amplitude dot = 0.0;
      for (std::size_t k = 0; k < dim; ++k) dot += std::conj(vectors[i][k]) * vectors[j][k];
      const Amplitude expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot - expect) > kAlgebraTol)
        throw InvariantViolation("basis vectors are not orthonormal");
    }
  }
  return OrthonormalBasis(dim, std::move(vectors));
}

OrthonormalBasis OrthonormalBasis::computational(std::size_t dim) {
  std::vector<std::vector<Amplitude>> v(dim, std::vector<Amplitude>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) v[i][i] = 1.0;
  return OrthonormalBasis(dim, std::move(v));
}

}  // namespace hqt
