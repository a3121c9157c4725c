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
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "clustercert/pauli.hpp"

namespace clustercert {

using cplx = std::complex<double>;

/// Largest register the dense simulator accepts. Defaults to 14; the
/// CLUSTERCERT_DENSE_LIMIT environment variable overrides it.
std::size_t dense_limit();

/// Normalized state vector; qubit 0 is the most significant index bit.
class PureState {
   public:
    PureState() = default;
    /// Validates length 2^n and unit norm (1e-10).
    PureState(std::size_t n_qubits, std::vector<cplx> amplitudes);

    /// Skips validation; the caller guarantees length and norm.
    static PureState unchecked(std::size_t n_qubits, std::vector<cplx> amplitudes);

    std::size_t n_qubits() const noexcept { return n_; }
    std::span<const cplx> amplitudes() const noexcept { return amps_; }
    std::span<cplx> mutable_amplitudes() noexcept { return amps_; }

   private:
    std::size_t n_ = 0;
    std::vector<cplx> amps_;
};

struct Branch {
    double weight = 0.0;
    PureState state;
};

/// Convex mixture sum_i w_i |psi_i><psi_i|, never materialized as a matrix.
class Ensemble {
   public:
    Ensemble() = default;
    /// Validates positive weights summing to 1 (1e-10) over equal-size states.
    explicit Ensemble(std::vector<Branch> branches);
    static Ensemble pure(PureState state);

    std::size_t n_qubits() const noexcept { return branches_.empty() ? 0 : branches_.front().state.n_qubits(); }
    std::span<const Branch> branches() const noexcept { return branches_; }
    std::size_t size() const noexcept { return branches_.size(); }

   private:
    std::vector<Branch> branches_;
};

/// Single-qubit measurement actions. Projector for outcome_bit 0 is
/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>; bit 1 selects the orthogonal
/// state sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>.
struct Keep {};
struct ClipZ {
    int outcome = +1;  // Z eigenvalue: +1 -> |0>, -1 -> |1>
};
struct Project {
    double theta = 0.0;
    double phi = 0.0;
    int outcome_bit = 0;
};
/// Discard the qubit (partial trace), realized by branching over Z outcomes.
struct Trace {};

using QubitAction = std::variant<Keep, ClipZ, Project, Trace>;

/// Equatorial projector |phi, s> = (|0> + (-1)^s e^{i phi} |1>)/sqrt(2).
Project equatorial(double phi, int s);
/// X-Z plane projector cos(theta/2)|0> + sin(theta/2)|1> (and its complement).
Project xz_plane(double theta, int outcome_bit = 0);
/// Projector sin(theta/2)|0> + e^{i phi} cos(theta/2)|1>, i.e. theta -> pi - theta.
Project sin_cos_form(double theta, double phi, int outcome_bit = 0);

/// Bra coefficients (<v|0>, <v|1>) of the projector's ket v.
std::pair<cplx, cplx> projector_bra(const Project& p);

struct MeasurementSpec {
    std::vector<QubitAction> actions;  // one per qubit

    static MeasurementSpec keep_all(std::size_t n);
    std::size_t kept() const;
};

/// 4x4 Hermitian, unit-trace, positive semidefinite operator on two qubits.
/// Basis index 2a+b with the first qubit most significant.
class TwoQubitState {
   public:
    /// Throws InvalidStateError unless Hermitian (1e-10), trace 1 (1e-10)
    /// and min eigenvalue >= -1e-9.
    explicit TwoQubitState(const Eigen::Matrix4cd& rho);

    const Eigen::Matrix4cd& matrix() const noexcept { return rho_; }
    double min_eigenvalue() const;

   private:
    Eigen::Matrix4cd rho_;
};

/// Checks the TwoQubitState invariants without throwing.
bool is_valid_two_qubit_state(const Eigen::Matrix4cd& rho, double tolerance = 1e-9);

struct MeasurementResult {
    double probability = 0.0;
    Ensemble state;  // on kept qubits, original order
};

/// |+>^n followed by controlled-phase gates on all neighbouring pairs.
PureState cluster_state(std::size_t n);

/// lambda |C_n><C_n| + (1-lambda)/n sum_i Z_i |C_n><C_n| Z_i.
Ensemble wc_state(std::size_t n, double lambda);

/// The uniform mixture of computational basis states.
Ensemble maximally_mixed(std::size_t n);

void apply_pauli(PureState& state, const PauliString& op);

/// <psi| op |psi> including the operator phase.
cplx expectation(const PureState& state, const PauliString& op);
/// Tr[op rho]; throws if the result has an imaginary part above 1e-10.
double expectation(const Ensemble& rho, const PauliString& op);

/// Applies per-qubit actions to every branch. Branches whose posterior
/// weight falls below 1e-14 are dropped and the rest renormalized.
/// Throws ImpossibleOutcomeError when the total probability is below 1e-12.
MeasurementResult apply_measurement(const Ensemble& rho, const MeasurementSpec& spec);

/// Keeps qubits [left, right], Z-projects their outside neighbours onto the
/// given outcomes, and traces out everything further away.
Ensemble clip_segment(const Ensemble& rho, std::size_t left, std::size_t right, int left_outcome = +1,
                      int right_outcome = +1);

/// Reduced state of qubits a and b (a is the first tensor factor).
TwoQubitState reduced_two_qubit(const Ensemble& rho, std::size_t a, std::size_t b);

/// <phi| rho |phi>.
double fidelity(const Ensemble& rho, const PureState& target);

/// Fidelity with |C_n> written as 2^-n sum_g sign(g) Tr[g rho] over all 2^n
/// stabilizer-group elements g, sign(g) = <C_n|g|C_n>.
double backbone_fidelity(const Ensemble& rho);

}  // namespace clustercert
