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

#include "hqt/assets.hpp"

#include <bit>
#include <cmath>
#include <utility>

namespace hqt {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_party_size(int n, const char* who) {
  if (n < 1) throw InvariantViolation(std::string(who) + " needs n >= 1");
}

}  // namespace

AliceState AliceState::create(int n, std::vector<Amplitude> alphas) {
  check_party_size(n, "alice state");
  if (alphas.size() != (std::size_t{1} << n))
    throw DimensionMismatch("alice state needs 2^n coefficients");
  double norm2 = 0.0;
  for (const Amplitude& a : alphas) {
    if (!is_finite(a)) throw InvariantViolation("alice coefficient is not finite");
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > kNormTol)
    throw InvariantViolation("alice state is not normalized");
  return AliceState{n, std::move(alphas)};
}

BobKnownState BobKnownState::product(std::vector<BobQubit> factors) {
  if (factors.empty()) throw InvariantViolation("bob state needs n >= 1");
  for (const BobQubit& q : factors) {
    if (!(q.beta0 >= 0.0) || !(q.beta1 >= 0.0))
      throw InvariantViolation("bob magnitudes must be non-negative");
    if (std::abs(q.beta0 * q.beta0 + q.beta1 * q.beta1 - 1.0) > kNormTol)
      throw InvariantViolation("bob qubit is not normalized");
    if (!std::isfinite(q.theta)) throw InvariantViolation("bob phase is not finite");
  }
  BobKnownState b;
  b.n = static_cast<int>(factors.size());
  b.mode = Mode::Product;
  b.factors = std::move(factors);
  return b;
}

BobKnownState BobKnownState::general(std::vector<double> betas, std::vector<double> thetas) {
  if (betas.size() < 2 || (betas.size() & (betas.size() - 1)) != 0)
    throw DimensionMismatch("bob general state needs 2^n magnitudes, n >= 1");
  if (thetas.size() != betas.size())
    throw DimensionMismatch("bob general state needs matching phase count");
  double norm2 = 0.0;
  for (double m : betas) {
    if (!(m >= 0.0)) throw InvariantViolation("bob magnitudes must be non-negative");
    norm2 += m * m;
  }
  if (std::abs(norm2 - 1.0) > kNormTol)
    throw InvariantViolation("bob general state is not normalized");
  for (double t : thetas)
    if (!std::isfinite(t)) throw InvariantViolation("bob phase is not finite");
  if (std::abs(thetas[0]) > kNormTol)
    throw InvariantViolation("bob general state fixes thetas[0] = 0");
  BobKnownState b;
  b.n = std::countr_zero(betas.size());
  b.mode = Mode::General;
  b.betas = std::move(betas);
  b.thetas = std::move(thetas);
  return b;
}

BobKnownState BobKnownState::to_general() const {
  if (mode == Mode::General) return *this;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> betas(dim), thetas(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    double mag = 1.0, phase = 0.0;
    for (int k = 0; k < n; ++k) {
      const bool one = (j >> (n - 1 - k)) & 1;
      mag *= one ? factors[k].beta1 : factors[k].beta0;
      if (one) phase += factors[k].theta;
    }
    betas[j] = mag;
    thetas[j] = phase;
  }
  return general(std::move(betas), std::move(thetas));
}

std::string to_string(BellOutcome b) {
  switch (b) {
    case BellOutcome::PhiPlus: return "phi+";
    case BellOutcome::PhiMinus: return "phi-";
    case BellOutcome::PsiPlus: return "psi+";
    case BellOutcome::PsiMinus: return "psi-";
  }
  return "?";
}

BellOutcome bell_outcome_from_string(const std::string& s) {
  if (s == "phi+") return BellOutcome::PhiPlus;
  if (s == "phi-") return BellOutcome::PhiMinus;
  if (s == "psi+") return BellOutcome::PsiPlus;
  if (s == "psi-") return BellOutcome::PsiMinus;
  throw Error("unknown Bell outcome '" + s + "' (expected phi+/phi-/psi+/psi-)");
}

std::string to_string(ChannelSignConvention c) {
  return c == ChannelSignConvention::Singlet ? "singlet" : "phiminus";
}

ChannelSignConvention convention_from_string(const std::string& s) {
  if (s == "singlet") return ChannelSignConvention::Singlet;
  if (s == "phiminus") return ChannelSignConvention::PhiMinus;
  throw Error("unknown sign convention '" + s + "' (expected singlet/phiminus)");
}

StateVector build_channel(int n, ChannelSignConvention conv) {
  check_party_size(n, "channel");
  const int pairs = 2 * n;
  const std::size_t qubit_count = static_cast<std::size_t>(4 * n + 1);
  std::vector<QubitLabel> labels;
  labels.reserve(qubit_count);
  for (int k = 1; k <= pairs; ++k) {
    labels.push_back(alice_channel(k));
    labels.push_back(bob_channel(k));
  }
  labels.push_back(controller());

  // Each branch is a product over the pairs, so the amplitude at an index is
  // nonzero only when every (A_k, B_k) assignment is legal for that branch:
  //   C = 0 branch: pairs from (|00> + |11>)/sqrt(2)
  //   C = 1 branch: singlet pairs (|01> - |10>)/sqrt(2), or (|00> - |11>)/sqrt(2)
  //                 under the PhiMinus convention.
  const std::size_t dim = std::size_t{1} << qubit_count;
  const double pair_scale = std::pow(kInvSqrt2, pairs);
  std::vector<Amplitude> amps(dim, 0.0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const bool c_bit = idx & 1;
    double value = pair_scale * kInvSqrt2;
    bool legal = true;
    for (int k = 0; k < pairs && legal; ++k) {
      const unsigned pair_bits =
          (idx >> (qubit_count - 2 - 2 * static_cast<std::size_t>(k))) & 3u;
      if (!c_bit) {
        legal = pair_bits == 0b00 || pair_bits == 0b11;
      } else if (conv == ChannelSignConvention::Singlet) {
        legal = pair_bits == 0b01 || pair_bits == 0b10;
        if (pair_bits == 0b10) value = -value;
      } else {
        legal = pair_bits == 0b00 || pair_bits == 0b11;
        if (pair_bits == 0b11) value = -value;
      }
    }
    if (legal) amps[idx] = value;
  }
  return StateVector::from_amplitudes(std::move(labels), std::move(amps));
}

OrthonormalBasis bell_basis() {
  return OrthonormalBasis::from_vectors({
      {kInvSqrt2, 0.0, 0.0, kInvSqrt2},    // phi+
      {kInvSqrt2, 0.0, 0.0, -kInvSqrt2},   // phi-
      {0.0, kInvSqrt2, kInvSqrt2, 0.0},    // psi+
      {0.0, kInvSqrt2, -kInvSqrt2, 0.0},   // psi-
  });
}

OrthonormalBasis amplitude_basis(double beta0, double beta1) {
  if (!(beta0 >= 0.0) || !(beta1 >= 0.0))
    throw InvariantViolation("amplitude basis needs non-negative magnitudes");
  if (std::abs(beta0 * beta0 + beta1 * beta1 - 1.0) > kNormTol)
    throw InvariantViolation("amplitude basis magnitudes are not normalized");
  return OrthonormalBasis::from_vectors({{beta0, beta1}, {beta1, -beta0}});
}

OrthonormalBasis phase_basis(double theta, int prior_outcome) {
  const Amplitude ph = std::polar(1.0, -theta);
  if (prior_outcome == 1)
    return OrthonormalBasis::from_vectors(
        {{kInvSqrt2, kInvSqrt2 * ph}, {kInvSqrt2, -kInvSqrt2 * ph}});
  if (prior_outcome == 2)
    return OrthonormalBasis::from_vectors(
        {{kInvSqrt2 * ph, kInvSqrt2}, {kInvSqrt2 * ph, -kInvSqrt2}});
  throw Error("phase basis selector must be outcome 1 or 2");
}

OrthonormalBasis amplitude_basis_general(const std::vector<double>& betas) {
  const std::size_t dim = betas.size();
  if (dim == 0 || (dim & (dim - 1)) != 0)
    throw DimensionMismatch("general amplitude basis needs 2^n magnitudes");
  double norm2 = 0.0;
  for (double b : betas) {
    if (!(b >= 0.0)) throw InvariantViolation("general basis magnitudes must be non-negative");
    norm2 += b * b;
  }
  if (std::abs(norm2 - 1.0) > kNormTol)
    throw InvariantViolation("general basis magnitudes are not normalized");

  // Householder reflection H = I - 2 u u^T / (u^T u) with u = e_0 - beta; H is
  // orthogonal and maps e_0 to beta, so its columns are the wanted basis.
  std::vector<double> u(betas);
  for (double& x : u) x = -x;
  u[0] += 1.0;
  double utu = 0.0;
  for (double x : u) utu += x * x;

  std::vector<std::vector<Amplitude>> vectors(dim, std::vector<Amplitude>(dim, 0.0));
  if (utu < 1e-24) {
    for (std::size_t i = 0; i < dim; ++i) vectors[i][i] = 1.0;  // beta == e_0
  } else {
    const double scale = 2.0 / utu;
    for (std::size_t col = 0; col < dim; ++col)
      for (std::size_t row = 0; row < dim; ++row)
        vectors[col][row] = (row == col ? 1.0 : 0.0) - scale * u[row] * u[col];
  }
  return OrthonormalBasis::from_vectors(std::move(vectors));
}

OrthonormalBasis phase_basis_general(const std::vector<double>& thetas) {
  const std::size_t dim = thetas.size();
  if (dim == 0 || (dim & (dim - 1)) != 0)
    throw DimensionMismatch("general phase basis needs 2^n phases");
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<std::vector<Amplitude>> vectors(dim, std::vector<Amplitude>(dim));
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t x = 0; x < dim; ++x) {
      const int parity = std::popcount(m & x) & 1;
      vectors[m][x] = std::polar(scale, -thetas[x]) * (parity ? -1.0 : 1.0);
    }
  return OrthonormalBasis::from_vectors(std::move(vectors));
}

StateVector state_of(const AliceState& alice) {
  std::vector<QubitLabel> labels;
  for (int k = 1; k <= alice.n; ++k) labels.push_back(alice_input(k));
  return StateVector::from_amplitudes(std::move(labels), alice.alphas);
}

StateVector state_of(const BobKnownState& bob) {
  std::vector<QubitLabel> labels;
  for (int k = 0; k < bob.n; ++k) labels.push_back(work(k));
  const BobKnownState g = bob.to_general();
  const std::size_t dim = std::size_t{1} << g.n;
  std::vector<Amplitude> amps(dim);
  for (std::size_t j = 0; j < dim; ++j) amps[j] = std::polar(g.betas[j], g.thetas[j]);
  return StateVector::from_amplitudes(std::move(labels), std::move(amps));
}

AliceState random_alice(int n, std::uint64_t seed) {
  check_party_size(n, "alice state");
  SeededRng rng(seed);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Amplitude> alphas(dim);
  double norm2 = 0.0;
  for (Amplitude& a : alphas) {
    a = Amplitude(rng.gaussian(), rng.gaussian());
    norm2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (Amplitude& a : alphas) a *= inv;
  return AliceState::create(n, std::move(alphas));
}

BobKnownState random_bob_product(int n, std::uint64_t seed) {
  check_party_size(n, "bob state");
  SeededRng rng(seed);
  std::vector<BobQubit> factors(static_cast<std::size_t>(n));
  for (BobQubit& q : factors) {
    const double xi = rng.uniform01() * M_PI / 2.0;
    q.beta0 = std::cos(xi);
    q.beta1 = std::sin(xi);
    q.theta = rng.uniform01() * 2.0 * M_PI;
  }
  return BobKnownState::product(std::move(factors));
}

}  // namespace hqt
