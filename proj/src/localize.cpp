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

#include "clustercert/localize.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <random>

#include "clustercert/entanglement.hpp"
#include "clustercert/errors.hpp"
#include "clustercert/kernels.hpp"

namespace clustercert {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNegligible = 1e-14;
constexpr double kImpossible = 1e-12;
constexpr int kPolishRounds = 5;

void require_angles(const Ensemble& rho, const AngleVector& angles) {
    if (rho.n_qubits() < 3) throw DomainError("need at least one measured qubit");
    if (angles.theta.size() != angles.phi.size() || angles.size() != rho.n_qubits() - 2) {
        throw DimensionError("angles must cover qubits 1..n-2");
    }
}

AngleVector from_params(std::span<const double> x) {
    const std::size_t m = x.size() / 2;
    return {std::vector<double>(x.begin(), x.begin() + m), std::vector<double>(x.begin() + m, x.end())};
}

std::pair<cplx, cplx> bra(const AngleVector& a, std::size_t i, int bit) {
    return projector_bra(sin_cos_form(a.theta[i], a.phi[i], bit));
}

// Accumulates sum_b w_b |v_b><v_b| over the end-qubit vectors left in `vecs`.
Eigen::Matrix4cd outer_sum(const std::vector<std::vector<cplx>>& vecs, std::span<const double> weights) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (std::size_t b = 0; b < vecs.size(); ++b) {
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) m(r, c) += weights[b] * vecs[b][r] * std::conj(vecs[b][c]);
        }
    }
    return m;
}

// Concurrence of m / tr(m); `raw` skips the clamp at zero.
double normalized_concurrence(const Eigen::Matrix4cd& m, double trace, bool raw) {
    Eigen::Matrix4cd rho = m / trace;
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const TwoQubitState state(rho);
    return raw ? concurrence_raw(state) : concurrence(state);
}

// Depth-first walk over measurement outcomes of qubits n-2 down to 1.
double averaged(const std::vector<std::vector<cplx>>& vecs, std::span<const double> weights, const AngleVector& a,
                unsigned width) {
    if (width == 2) {
        const Eigen::Matrix4cd m = outer_sum(vecs, weights);
        const double p = m.trace().real();
        return p < kNegligible ? 0.0 : p * normalized_concurrence(m, p, false);
    }
    const unsigned q = width - 2;
    double total = 0.0;
    std::vector<std::vector<cplx>> next(vecs.size(), std::vector<cplx>(vecs.front().size() / 2));
    for (int bit = 0; bit < 2; ++bit) {
        const auto [b0, b1] = bra(a, q - 1, bit);
        for (std::size_t b = 0; b < vecs.size(); ++b) kernels::contract_qubit(vecs[b], width, q, b0, b1, next[b]);
        total += averaged(next, weights, a, width - 1);
    }
    return total;
}

std::vector<std::vector<cplx>> branch_vectors(const Ensemble& rho, std::vector<double>& weights) {
    std::vector<std::vector<cplx>> vecs;
    weights.clear();
    for (const auto& br : rho.branches()) {
        vecs.emplace_back(br.state.amplitudes().begin(), br.state.amplitudes().end());
        weights.push_back(br.weight);
    }
    return vecs;
}

// Unnormalized end-qubit state for the all-zero outcome.
Eigen::Matrix4cd postselected_matrix(const Ensemble& rho, const AngleVector& a) {
    std::vector<double> weights;
    auto vecs = branch_vectors(rho, weights);
    auto width = static_cast<unsigned>(rho.n_qubits());
    for (; width > 2; --width) {
        const unsigned q = width - 2;
        const auto [b0, b1] = bra(a, q - 1, 0);
        for (auto& v : vecs) {
            std::vector<cplx> out(v.size() / 2);
            kernels::contract_qubit(v, width, q, b0, b1, out);
            v = std::move(out);
        }
    }
    return outer_sum(vecs, weights);
}

double objective(const Ensemble& rho, std::span<const double> x, LocalizeMode mode) {
    const AngleVector a = from_params(x);
    if (mode == LocalizeMode::OutcomeAveraged) {
        std::vector<double> weights;
        const auto vecs = branch_vectors(rho, weights);
        return -averaged(vecs, weights, a, static_cast<unsigned>(rho.n_qubits()));
    }
    const Eigen::Matrix4cd m = postselected_matrix(rho, a);
    const double p = m.trace().real();
    if (p < kImpossible) return 2.0;
    return -normalized_concurrence(m, p, true);
}

struct RestartOutcome {
    NelderMeadResult fit;
    int iterations = 0;
};

RestartOutcome run_restart(const Ensemble& rho, const OptimizerConfig& cfg, LocalizeMode mode, int restart) {
    const std::size_t m = rho.n_qubits() - 2;
    std::seed_seq seq{std::uint32_t(cfg.seed), std::uint32_t(cfg.seed >> 32), std::uint32_t(restart)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(2 * m);
    for (std::size_t i = 0; i < m; ++i) x[i] = std::numbers::pi * unit(rng);
    for (std::size_t i = 0; i < m; ++i) x[m + i] = kTwoPi * unit(rng);

    const NelderMeadOptions opts{cfg.simplex_init_step, cfg.f_tolerance, cfg.max_iterations};
    const Objective f = [&](std::span<const double> p) { return objective(rho, p, mode); };
    RestartOutcome out;
    out.fit = nelder_mead(f, x, opts);
    out.iterations = out.fit.iterations;
    // Re-seed the simplex at the best point until it stops improving.
    for (int round = 0; round < kPolishRounds; ++round) {
        auto again = nelder_mead(f, out.fit.x, opts);
        out.iterations += again.iterations;
        const bool improved = again.value < out.fit.value - cfg.f_tolerance;
        if (again.value <= out.fit.value) out.fit = std::move(again);
        if (!improved) break;
    }
    return out;
}

}  // namespace

AngleVector AngleVector::wrapped() const {
    AngleVector out = *this;
    for (std::size_t i = 0; i < size(); ++i) {
        double t = std::fmod(theta[i], kTwoPi);
        if (t < 0) t += kTwoPi;
        double p = phi[i];
        if (t > std::numbers::pi) {
            t = kTwoPi - t;
            p += std::numbers::pi;
        }
        p = std::fmod(p, kTwoPi);
        if (p < 0) p += kTwoPi;
        out.theta[i] = t;
        out.phi[i] = p;
    }
    return out;
}

double AngleVector::theta_rms_deviation() const {
    if (size() == 0) return 0.0;
    const AngleVector w = wrapped();
    double acc = 0.0;
    for (double t : w.theta) acc += (t - std::numbers::pi / 2) * (t - std::numbers::pi / 2);
    return std::sqrt(acc / double(size()));
}

void validate(const OptimizerConfig& cfg) {
    if (cfg.restarts < 1) throw DomainError("restarts must be at least 1");
    if (cfg.max_iterations < 1) throw DomainError("max_iterations must be at least 1");
    if (!(cfg.f_tolerance > 0.0)) throw DomainError("f_tolerance must be positive");
    if (!(cfg.simplex_init_step > 0.0)) throw DomainError("simplex_init_step must be positive");
}

const char* mode_name(LocalizeMode m) {
    return m == LocalizeMode::Postselected ? "postselected" : "outcome_averaged";
}

LocalizeMode parse_mode(const std::string& text) {
    if (text == "postselected") return LocalizeMode::Postselected;
    if (text == "outcome_averaged") return LocalizeMode::OutcomeAveraged;
    throw DomainError("mode must be postselected or outcome_averaged");
}

std::pair<double, TwoQubitState> localized_state(const Ensemble& rho, const AngleVector& angles,
                                                 std::span<const int> outcomes) {
    require_angles(rho, angles);
    if (outcomes.size() != angles.size()) throw DimensionError("one outcome per measured qubit");
    MeasurementSpec spec = MeasurementSpec::keep_all(rho.n_qubits());
    for (std::size_t i = 0; i < angles.size(); ++i) {
        spec.actions[i + 1] = sin_cos_form(angles.theta[i], angles.phi[i], outcomes[i]);
    }
    auto result = apply_measurement(rho, spec);
    return {result.probability, reduced_two_qubit(result.state, 0, 1)};
}

double outcome_averaged_concurrence(const Ensemble& rho, const AngleVector& angles) {
    require_angles(rho, angles);
    std::vector<double> weights;
    const auto vecs = branch_vectors(rho, weights);
    return averaged(vecs, weights, angles, static_cast<unsigned>(rho.n_qubits()));
}

LocalizeResult maximize_le(const Ensemble& rho, const OptimizerConfig& cfg, LocalizeMode mode) {
    validate(cfg);
    if (rho.n_qubits() < 3) throw DomainError("need at least one measured qubit");
    if (rho.n_qubits() > 9) throw ResourceError("localization search is limited to n <= 9");
    std::vector<RestartOutcome> runs(static_cast<std::size_t>(cfg.restarts));
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < cfg.restarts; ++r) runs[static_cast<std::size_t>(r)] = run_restart(rho, cfg, mode, r);

    int best = 0;
    for (int r = 1; r < cfg.restarts; ++r) {
        if (runs[std::size_t(r)].fit.value < runs[std::size_t(best)].fit.value) best = r;
    }
    const auto& win = runs[std::size_t(best)];
    LocalizeResult out;
    out.best_angles = from_params(win.fit.x).wrapped();
    out.best_value = std::max(0.0, -win.fit.value);
    out.iterations = win.iterations;
    out.converged = win.fit.converged;
    out.best_restart = best;
    return out;
}

double equatorial_check(double lambda, std::size_t n, std::span<const double> phi, std::span<const int> outcomes) {
    if (n < 3) throw DomainError("need at least one measured qubit");
    if (phi.size() != n - 2 || outcomes.size() != n - 2) throw DimensionError("one phase and outcome per measured qubit");
    const Ensemble rho = wc_state(n, lambda);
    MeasurementSpec spec = MeasurementSpec::keep_all(n);
    for (std::size_t i = 0; i < n - 2; ++i) spec.actions[i + 1] = equatorial(phi[i], outcomes[i]);
    const auto result = apply_measurement(rho, spec);
    return concurrence(reduced_two_qubit(result.state, 0, 1));
}

Wc4Table wc4_grid_compare(std::span<const double> lambda_grid, std::span<const double> theta2_grid,
                          std::span<const double> theta3_grid) {
    if (lambda_grid.empty() || theta2_grid.empty() || theta3_grid.empty()) throw DomainError("grids must be nonempty");
    Wc4Table table;
    for (double lambda : lambda_grid) {
        const Ensemble rho = wc_state(4, lambda);
        for (double t2 : theta2_grid) {
            for (double t3 : theta3_grid) {
                MeasurementSpec spec = MeasurementSpec::keep_all(4);
                spec.actions[1] = xz_plane(t2);
                spec.actions[2] = xz_plane(t3);
                const auto result = apply_measurement(rho, spec);
                Wc4Row row{lambda, t2, t3, concurrence(reduced_two_qubit(result.state, 0, 1)),
                           x_state_concurrence_wc4(lambda, t2, t3)};
                table.max_deviation = std::max(table.max_deviation, std::abs(row.simulated - row.closed_form));
                table.rows.push_back(row);
            }
        }
    }
    return table;
}

std::vector<SweepRow> localize_sweep(std::size_t n, std::span<const double> lambdas, LocalizeMode mode,
                                     const OptimizerConfig& cfg) {
    if (n < 3 || n > 9) throw DomainError("localize sweep needs 3 <= n <= 9");
    std::vector<SweepRow> rows;
    for (double lambda : lambdas) rows.push_back({lambda, n, mode, maximize_le(wc_state(n, lambda), cfg, mode)});
    return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << "lambda,n,mode,best_value,theta_rms_deviation_from_pi_over_2,iterations,converged\n";
    for (const auto& r : rows) {
        out << fmt::format("{:.12g},{},{},{:.12g},{:.12g},{},{}\n", r.lambda, r.n, mode_name(r.mode),
                           r.result.best_value, r.result.best_angles.theta_rms_deviation(), r.result.iterations,
                           r.result.converged ? "true" : "false");
    }
}

}  // namespace clustercert
