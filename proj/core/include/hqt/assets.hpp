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

#include <cstdint>
#include <string>
#include <vector>

#include "hqt/statevector.hpp"

namespace hqt {

// Alice's unknown n-qubit input: 2^n complex coefficients, unit norm.
struct AliceState {
  int n = 0;
  std::vector<Amplitude> alphas;

  static AliceState create(int n, std::vector<Amplitude> alphas);
};

// One factor of Bob's product-form input: beta0|0> + beta1 e^{i theta}|1>
// with beta0, beta1 >= 0 and beta0^2 + beta1^2 = 1.
struct BobQubit {
  double beta0 = 1.0;
  double beta1 = 0.0;
  double theta = 0.0;
};

// Bob's known n-qubit input. Product mode (the protocol's native form)
// stores one BobQubit per qubit; General mode stores 2^n non-negative
// magnitudes plus phases with thetas[0] == 0.
struct BobKnownState {
  enum class Mode { Product, General };

  int n = 0;
  Mode mode = Mode::Product;
  std::vector<BobQubit> factors;  // Product: size n
  std::vector<double> betas;      // General: size 2^n
  std::vector<double> thetas;     // General: size 2^n, thetas[0] == 0

  static BobKnownState product(std::vector<BobQubit> factors);
  static BobKnownState general(std::vector<double> betas, std::vector<double> thetas);

  // Expands a product state into the equivalent General representation.
  BobKnownState to_general() const;
};

// Outcomes of the two-qubit Bell measurement, in basis order.
enum class BellOutcome { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
std::string to_string(BellOutcome b);                    // "phi+", "psi-"...
BellOutcome bell_outcome_from_string(const std::string& s);

// Sign convention for the second branch of the shared channel: the published
// state writes its "phi-" pairs literally as (|01> - |10>)/sqrt(2) (the
// singlet), clashing with the phi- defined for the measurement basis.
// Singlet follows the literal state; PhiMinus substitutes (|00> - |11>)/sqrt(2).
enum class ChannelSignConvention { Singlet, PhiMinus };
std::string to_string(ChannelSignConvention c);          // "singlet"/"phiminus"
ChannelSignConvention convention_from_string(const std::string& s);

struct CharlieBit {
  int value = 0;  // 0 or 1
};

// The (4n+1)-qubit shared channel over A_1,B_1,...,A_2n,B_2n,C:
//   ( (x)_k phi+_{A_k B_k} |0>_C  +  (x)_k minus-pair_{A_k B_k} |1>_C ) / sqrt(2)
StateVector build_channel(int n, ChannelSignConvention conv);

// Bell basis in outcome order phi+, phi-, psi+, psi- with
// phi+- = (|00> +- |11>)/sqrt(2), psi+- = (|01> +- |10>)/sqrt(2).
OrthonormalBasis bell_basis();

// Bob's amplitude measurement basis { beta0|0> + beta1|1>, beta1|0> - beta0|1> }.
OrthonormalBasis amplitude_basis(double beta0, double beta1);

// Bob's phase measurement basis; which slot carries e^{-i theta} depends on
// the preceding amplitude outcome (1 or 2):
//   outcome 1: { (|0> + e^{-i theta}|1>)/sqrt(2), (|0> - e^{-i theta}|1>)/sqrt(2) }
//   outcome 2: { (e^{-i theta}|0> + |1>)/sqrt(2), (e^{-i theta}|0> - |1>)/sqrt(2) }
OrthonormalBasis phase_basis(double theta, int prior_outcome);

// Multi-qubit amplitude basis for General mode: the Householder reflection
// mapping |0...0> to sum_j beta_j |j>, columns taken as basis vectors.
// For n = 1 this reproduces amplitude_basis exactly.
OrthonormalBasis amplitude_basis_general(const std::vector<double>& betas);

// Multi-qubit phase basis for General mode: rows of diag(e^{-i theta_x}) H^{(x)n}
// -- vector m has components e^{-i theta_x} (-1)^{popcount(m & x)} / sqrt(2^n).
// For n = 1 this reproduces phase_basis(theta, 1).
OrthonormalBasis phase_basis_general(const std::vector<double>& thetas);

// Statevector forms of the two inputs. Alice's is labeled a_1..a_n; Bob's
// reference state uses work labels (it never joins the protocol register).
StateVector state_of(const AliceState& alice);
StateVector state_of(const BobKnownState& bob);

// Haar-ish random inputs (normalized complex Gaussian coefficients; uniform
// Bloch angles for Bob). Fully determined by the seed.
AliceState random_alice(int n, std::uint64_t seed);
BobKnownState random_bob_product(int n, std::uint64_t seed);

}  // namespace hqt
