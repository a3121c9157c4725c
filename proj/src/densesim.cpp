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

#include "clustercert/densesim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "clustercert/errors.hpp"
#include "clustercert/kernels.hpp"

namespace clustercert {

namespace {

constexpr double kNormTolerance = 1e-10;
constexpr double kPruneWeight = 1e-14;
constexpr double kImpossibleProbability = 1e-12;

void require_dense(std::size_t n) {
    if (n > dense_limit()) {
        throw ResourceError("dense simulation of " + std::to_string(n) + " qubits exceeds the limit of " +
                            std::to_string(dense_limit()));
    }
}

// Bra coefficients <v| for a single-qubit action, i.e. conj of the ket.
std::pair<cplx, cplx> bra_of(const QubitAction& action) {
    if (const auto* clip = std::get_if<ClipZ>(&action)) {
        if (clip->outcome != 1 && clip->outcome != -1) throw DomainError("Z outcome must be +1 or -1");
        return clip->outcome == 1 ? std::pair<cplx, cplx>{1.0, 0.0} : std::pair<cplx, cplx>{0.0, 1.0};
    }
    return projector_bra(std::get<Project>(action));
}

std::vector<cplx> contracted(std::span<const cplx> amps, unsigned n, unsigned q, cplx b0, cplx b1) {
    std::vector<cplx> out(amps.size() / 2);
    kernels::contract_qubit(amps, n, q, b0, b1, out);
    return out;
}

}  // namespace

std::size_t dense_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("CLUSTERCERT_DENSE_LIMIT")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 2 && v <= 30) return static_cast<std::size_t>(v);
        }
        return std::size_t{14};
    }();
    return limit;
}

PureState::PureState(std::size_t n_qubits, std::vector<cplx> amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_ == 0 || n_ > 30 || amps_.size() != (std::size_t{1} << n_)) {
        throw DimensionError("amplitude vector length must be 2^n");
    }
    const double norm = kernels::norm_squared(amps_);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw DomainError("state is not normalized (|psi|^2 = " + std::to_string(norm) + ")");
    }
}

PureState PureState::unchecked(std::size_t n_qubits, std::vector<cplx> amplitudes) {
    PureState s;
    s.n_ = n_qubits;
    s.amps_ = std::move(amplitudes);
    return s;
}

Ensemble::Ensemble(std::vector<Branch> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) throw DomainError("ensemble needs at least one branch");
    double total = 0.0;
    for (const auto& b : branches_) {
        if (!(b.weight > 0.0)) throw DomainError("ensemble weights must be positive");
        if (b.state.n_qubits() != branches_.front().state.n_qubits()) {
            throw DimensionError("ensemble branches differ in qubit count");
        }
        total += b.weight;
    }
    if (std::abs(total - 1.0) > kNormTolerance) throw DomainError("ensemble weights must sum to 1");
}

Ensemble Ensemble::pure(PureState state) { return Ensemble({Branch{1.0, std::move(state)}}); }

std::pair<cplx, cplx> projector_bra(const Project& p) {
    if (p.outcome_bit != 0 && p.outcome_bit != 1) throw DomainError("outcome bit must be 0 or 1");
    const double c = std::cos(p.theta / 2);
    const double s = std::sin(p.theta / 2);
    const cplx phase = std::polar(1.0, p.phi);
    const cplx k0 = p.outcome_bit == 0 ? cplx(c) : cplx(s);
    const cplx k1 = p.outcome_bit == 0 ? phase * s : -phase * c;
    return {std::conj(k0), std::conj(k1)};
}

Project equatorial(double phi, int s) { return Project{std::numbers::pi / 2, phi, s}; }

Project xz_plane(double theta, int outcome_bit) { return Project{theta, 0.0, outcome_bit}; }

Project sin_cos_form(double theta, double phi, int outcome_bit) {
    return Project{std::numbers::pi - theta, phi, outcome_bit};
}

MeasurementSpec MeasurementSpec::keep_all(std::size_t n) { return {std::vector<QubitAction>(n, Keep{})}; }

std::size_t MeasurementSpec::kept() const {
    return std::count_if(actions.begin(), actions.end(),
                         [](const QubitAction& a) { return std::holds_alternative<Keep>(a); });
}

bool is_valid_two_qubit_state(const Eigen::Matrix4cd& rho, double tolerance) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) return false;
    if (std::abs(rho.trace() - cplx(1.0)) > 1e-10) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tolerance;
}

TwoQubitState::TwoQubitState(const Eigen::Matrix4cd& rho) : rho_(rho) {
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw InvalidStateError("two-qubit operator is not Hermitian");
    }
    if (std::abs(rho_.trace() - cplx(1.0)) > 1e-10) throw InvalidStateError("two-qubit operator trace != 1");
    if (min_eigenvalue() < -1e-9) throw InvalidStateError("two-qubit operator is not positive semidefinite");
}

double TwoQubitState::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

PureState cluster_state(std::size_t n) {
    if (n < 2) throw DomainError("cluster_state needs n >= 2");
    require_dense(n);
    std::vector<cplx> amps(std::size_t{1} << n, cplx(1.0 / std::sqrt(double(std::size_t{1} << n))));
    const auto nn = static_cast<unsigned>(n);
    for (unsigned q = 0; q + 1 < nn; ++q) kernels::apply_cz(amps, nn, q, q + 1);
    return PureState::unchecked(n, std::move(amps));
}

Ensemble wc_state(std::size_t n, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("lambda must lie in [0, 1]");
    const PureState c = cluster_state(n);
    std::vector<Branch> branches;
    if (lambda > 0.0) branches.push_back({lambda, c});
    if (lambda < 1.0) {
        const double w = (1.0 - lambda) / double(n);
        for (std::size_t i = 0; i < n; ++i) {
            PureState flipped = c;
            apply_pauli(flipped, PauliString::single(n, i, 'Z'));
            branches.push_back({w, std::move(flipped)});
        }
    }
    return Ensemble(std::move(branches));
}

Ensemble maximally_mixed(std::size_t n) {
    require_dense(n);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Branch> branches;
    branches.reserve(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        std::vector<cplx> amps(dim, 0.0);
        amps[b] = 1.0;
        branches.push_back({1.0 / double(dim), PureState::unchecked(n, std::move(amps))});
    }
    return Ensemble(std::move(branches));
}

void apply_pauli(PureState& state, const PauliString& op) {
    if (op.n_qubits() != state.n_qubits()) throw DimensionError("Pauli/state qubit count mismatch");
    const auto n = static_cast<unsigned>(state.n_qubits());
    auto amps = state.mutable_amplitudes();
    static const kernels::Gate2x2 kX{0.0, 1.0, 1.0, 0.0};
    static const kernels::Gate2x2 kY{0.0, cplx(0, -1), cplx(0, 1), 0.0};
    static const kernels::Gate2x2 kZ{1.0, 0.0, 0.0, -1.0};
    for (unsigned q = 0; q < n; ++q) {
        switch (op.letter(q)) {
            case 'X': kernels::apply_1q(amps, n, q, kX); break;
            case 'Y': kernels::apply_1q(amps, n, q, kY); break;
            case 'Z': kernels::apply_1q(amps, n, q, kZ); break;
            default: break;
        }
    }
    static const cplx kPhase[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    const cplx ph = kPhase[op.phase_exponent()];
    if (ph != cplx(1.0)) {
        for (auto& a : amps) a *= ph;
    }
}

cplx expectation(const PureState& state, const PauliString& op) {
    if (op.n_qubits() != state.n_qubits()) throw DimensionError("Pauli/state qubit count mismatch");
    // op = i^{e + #Y} X^xmask Z^zmask since Y = i X Z.
    static const cplx kPhase[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    const unsigned e = (op.phase_exponent() + static_cast<unsigned>(op.y_count())) & 3u;
    return kPhase[e] * kernels::xz_expectation(state.amplitudes(), op.x_mask(), op.z_mask());
}

double expectation(const Ensemble& rho, const PauliString& op) {
    if (op.n_qubits() != rho.n_qubits()) throw DimensionError("Pauli/ensemble qubit count mismatch");
    cplx acc = 0.0;
    for (const auto& b : rho.branches()) acc += b.weight * expectation(b.state, op);
    if (std::abs(acc.imag()) > 1e-10) {
        throw DomainError("expectation has an imaginary part; operator is not Hermitian");
    }
    return acc.real();
}

MeasurementResult apply_measurement(const Ensemble& rho, const MeasurementSpec& spec) {
    const std::size_t n = rho.n_qubits();
    if (spec.actions.size() != n) throw DimensionError("measurement spec must cover every qubit");
    const std::size_t kept = spec.kept();
    if (kept == 0) throw DomainError("measurement spec keeps no qubits");

    std::vector<std::pair<double, std::vector<cplx>>> pieces;
    for (const auto& branch : rho.branches()) {
        std::vector<std::vector<cplx>> current;
        current.emplace_back(branch.state.amplitudes().begin(), branch.state.amplitudes().end());
        unsigned width = static_cast<unsigned>(n);
        // Descending order keeps the register positions of lower qubits valid.
        for (std::size_t q = n; q-- > 0;) {
            const auto& action = spec.actions[q];
            if (std::holds_alternative<Keep>(action)) continue;
            std::vector<std::vector<cplx>> next;
            if (std::holds_alternative<Trace>(action)) {
                for (const auto& v : current) {
                    next.push_back(contracted(v, width, unsigned(q), 1.0, 0.0));
                    next.push_back(contracted(v, width, unsigned(q), 0.0, 1.0));
                }
            } else {
                const auto [b0, b1] = bra_of(action);
                for (const auto& v : current) next.push_back(contracted(v, width, unsigned(q), b0, b1));
            }
            current = std::move(next);
            --width;
        }
        for (auto& v : current) pieces.emplace_back(branch.weight, std::move(v));
    }

    double total = 0.0;
    std::vector<double> mass(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        mass[i] = pieces[i].first * kernels::norm_squared(pieces[i].second);
        total += mass[i];
    }
    if (total < kImpossibleProbability) {
        throw ImpossibleOutcomeError("measurement outcome has probability " + std::to_string(total));
    }

    std::vector<Branch> out;
    double kept_mass = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (mass[i] / total < kPruneWeight) continue;
        kept_mass += mass[i];
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (mass[i] / total < kPruneWeight) continue;
        auto& v = pieces[i].second;
        const double scale = 1.0 / std::sqrt(mass[i] / pieces[i].first);
        for (auto& a : v) a *= scale;
        out.push_back({mass[i] / kept_mass, PureState::unchecked(kept, std::move(v))});
    }
    return {total, Ensemble(std::move(out))};
}

Ensemble clip_segment(const Ensemble& rho, std::size_t left, std::size_t right, int left_outcome,
                      int right_outcome) {
    const std::size_t n = rho.n_qubits();
    if (!(left < right)) throw DomainError("clip_segment needs left < right");
    if (left == 0 || right + 1 >= n) throw DomainError("clip_segment needs an outside neighbour on both sides");
    MeasurementSpec spec;
    spec.actions.assign(n, Trace{});
    for (std::size_t q = left; q <= right; ++q) spec.actions[q] = Keep{};
    spec.actions[left - 1] = ClipZ{left_outcome};
    spec.actions[right + 1] = ClipZ{right_outcome};
    return apply_measurement(rho, spec).state;
}

TwoQubitState reduced_two_qubit(const Ensemble& rho, std::size_t a, std::size_t b) {
    const std::size_t n = rho.n_qubits();
    if (a == b || a >= n || b >= n) throw DimensionError("reduced_two_qubit needs two distinct valid qubits");
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (const auto& br : rho.branches()) {
        const auto part = kernels::reduce_pair(br.state.amplitudes(), unsigned(n), unsigned(a), unsigned(b));
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) m(r, c) += br.weight * part[4 * r + c];
        }
    }
    // Symmetrize round-off before validation.
    m = 0.5 * (m + m.adjoint()).eval();
    return TwoQubitState(m);
}

double fidelity(const Ensemble& rho, const PureState& target) {
    if (rho.n_qubits() != target.n_qubits()) throw DimensionError("fidelity qubit count mismatch");
    double acc = 0.0;
    for (const auto& b : rho.branches()) {
        cplx overlap = 0.0;
        const auto x = target.amplitudes();
        const auto y = b.state.amplitudes();
        for (std::size_t i = 0; i < x.size(); ++i) overlap += std::conj(x[i]) * y[i];
        acc += b.weight * std::norm(overlap);
    }
    return acc;
}

double backbone_fidelity(const Ensemble& rho) {
    const std::size_t n = rho.n_qubits();
    if (n > 20) throw ResourceError("backbone expansion enumerates 2^n elements");
    const auto gens = cluster_generators(n);
    const Ensemble ideal = Ensemble::pure(cluster_state(n));
    const std::size_t count = std::size_t{1} << n;
    double acc = 0.0;
    std::vector<std::uint8_t> exps(n);
    for (std::size_t mask = 0; mask < count; ++mask) {
        for (std::size_t i = 0; i < n; ++i) exps[i] = (mask >> i) & 1u;
        const auto element = compose_exponents(gens, exps);
        const double sign = expectation(ideal, element.op) >= 0.0 ? 1.0 : -1.0;
        acc += sign * expectation(rho, element.op);
    }
    return acc / double(count);
}

}  // namespace clustercert
