// Copyright 2026 The clustercert Authors
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

#include <Eigen/Dense>
#include <array>

#include "clustercert/densesim.hpp"

namespace clustercert {

/// Correlations of a t-state 1/4 (1 + sum_i t_i sigma_i ⊗ sigma'_i), each in [0, 1].
struct TripletValues {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;

    double sum() const noexcept { return t1 + t2 + t3; }
};

enum class AbsorbSide { First, Last };

/// Triplet with negative entries made positive by relabeling sigma_i -> -sigma_i
/// on one side; `flipped[i]` records which entries changed sign.
struct SignAbsorbedTriplet {
    TripletValues values;
    std::array<bool, 3> flipped{};
    AbsorbSide side = AbsorbSide::First;
};

SignAbsorbedTriplet absorb_signs(double t1, double t2, double t3, AbsorbSide side = AbsorbSide::First);

/// 1/4 (1⊗1 + t1 Y⊗Z + t2 Z⊗Y + t3 X⊗X): the state left by a Y-measurement chain.
/// Throws InvalidStateError outside the physical tetrahedron.
TwoQubitState t_state(const TripletValues& t);

/// max{0, (t1+t2+t3-1)/2}.
double t_state_concurrence(const TripletValues& t);

/// Wootters concurrence. `concurrence_raw` is l1-l2-l3-l4 before clamping,
/// where l_i are the descending square roots of the spectrum of rho·rho~.
double concurrence(const TwoQubitState& rho);
double concurrence_raw(const TwoQubitState& rho);

/// Largest overlap with a maximally entangled state reachable by a local
/// unitary on the second qubit: the top eigenvalue of Re(rho) in the magic basis.
double fully_entangled_fraction(const TwoQubitState& rho);

/// (1 + 2 F) / 3.
double teleport_fidelity(double fef);

/// Closed-form concurrence after X-Z plane measurements (theta2, theta3) on the
/// middle qubits of the four-qubit worst-case mixture:
/// max{0, (3 lambda - 1) S / 2 + (lambda - 1) / 2} with S = sin(theta2) sin(theta3).
double x_state_concurrence_wc4(double lambda, double theta2, double theta3);

struct BlochDecomposition {
    Eigen::Vector3d r = Eigen::Vector3d::Zero();   // <sigma_i ⊗ 1>
    Eigen::Vector3d s = Eigen::Vector3d::Zero();   // <1 ⊗ sigma_j>
    Eigen::Matrix3d T = Eigen::Matrix3d::Zero();   // <sigma_i ⊗ sigma_j>

    Eigen::Matrix4cd reconstruct() const;
};

BlochDecomposition bloch_decompose(const TwoQubitState& rho);

/// Pauli matrices indexed 0..3 = I, X, Y, Z.
const Eigen::Matrix2cd& pauli_matrix(int k);

}  // namespace clustercert
