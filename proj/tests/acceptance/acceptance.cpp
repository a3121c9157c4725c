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

// Acceptance checks 1-12. One PASS/FAIL line per criterion; exit status 1
// if any criterion fails.

#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "clustercert/bounds.hpp"
#include "clustercert/densesim.hpp"
#include "clustercert/entanglement.hpp"
#include "clustercert/errormodel.hpp"
#include "clustercert/estimation.hpp"
#include "clustercert/localize.hpp"
#include "clustercert/pauli.hpp"
#include "dense_oracle.hpp"

using namespace clustercert;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Tracks the worst deviation seen and the first failure message.
struct Check {
    bool ok = true;
    double worst = 0.0;
    std::string first_failure;

    void near(double got, double want, double tol, const std::string& what) {
        const double d = std::abs(got - want);
        worst = std::max(worst, d);
        if (!(d <= tol)) fail(fmt::format("{}: got {:.12g}, want {:.12g}", what, got, want));
    }
    void that(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
    void fail(const std::string& what) {
        if (ok) first_failure = what;
        ok = false;
    }
    Verdict result(const std::string& summary) const { return {ok, ok ? summary : first_failure}; }
};

std::vector<MeasurementBasis> bases_of(std::size_t n, unsigned mask) {
    std::vector<MeasurementBasis> b(n - 2);
    for (std::size_t i = 0; i < n - 2; ++i) b[i] = (mask >> i) & 1u ? MeasurementBasis::Y : MeasurementBasis::X;
    return b;
}

oracle::Mat dense(const PauliString& p) {
    std::string letters;
    for (std::size_t q = 0; q < p.n_qubits(); ++q) letters += p.letter(q);
    static const oracle::cplx phases[4] = {1.0, {0, 1}, -1.0, {0, -1}};
    return phases[p.phase_exponent()] * oracle::pauli_string(letters);
}

const std::vector<double> kZGrid{0.9, 0.95, 0.99};

Verdict criterion_1() {
    Check c;
    c.that(threshold_z_exact(5) == Rational{6, 7}, "threshold_z(5) != 6/7");
    c.that(threshold_z_exact(20) == Rational{21, 22}, "threshold_z(20) != 21/22");
    c.that(threshold_z_exact(1) == Rational{2, 3}, "threshold_z(1) != 2/3");
    c.near(threshold_z(5), 6.0 / 7.0, 1e-15, "threshold_z(5)");
    c.near(threshold_z(20), 21.0 / 22.0, 1e-15, "threshold_z(20)");
    return c.result(fmt::format("thresholds {} {} {}", threshold_z_exact(1).str(), threshold_z_exact(5).str(),
                                threshold_z_exact(20).str()));
}

Verdict criterion_2() {
    Check c;
    std::size_t count = 0;
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto gens = cluster_generators(n);
        for (double z : kZGrid) {
            const auto rho = wc_state(n, wc_lambda(z, int(n)));
            std::vector<std::uint8_t> e(n);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> i) & 1u;
                const auto el = compose_exponents(gens, e);
                c.near(expectation(rho, el.op), backbone_floor_raw(el.m, z), 1e-10,
                       fmt::format("n={} z={} {}", n, z, el.op.str()));
                ++count;
            }
        }
    }
    return c.result(fmt::format("{} expectations, max deviation {:.2e}", count, c.worst));
}

Verdict criterion_3() {
    Check c;
    for (std::size_t n = 3; n <= 8; ++n) {
        for (double z : kZGrid) {
            const auto rho = wc_state(n, wc_lambda(z, int(n)));
            const double expected = fidelity_floor_uniform(z, int(n));
            c.near(fidelity(rho, cluster_state(n)), expected, 1e-10, fmt::format("fidelity n={} z={}", n, z));
            if (n <= 6) {
                c.near(backbone_fidelity(rho), expected, 1e-10, fmt::format("backbone n={} z={}", n, z));
                // Independent overlap from the dense-matrix reference.
                const oracle::Vec cl = oracle::cluster(int(n));
                const double ref = (cl.adjoint() * oracle::wc_density(int(n), wc_lambda(z, int(n))) * cl)(0).real();
                c.near(ref, expected, 1e-10, fmt::format("oracle n={} z={}", n, z));
            }
        }
    }
    return c.result(fmt::format("max deviation {:.2e}", c.worst));
}

Verdict criterion_4() {
    Check c;
    std::size_t sequences = 0;
    for (std::size_t n = 3; n <= 10; ++n) {
        for (unsigned mask = 0; mask < (1u << (n - 2)); ++mask) {
            const auto t = surviving_triplet(n, bases_of(n, mask));
            ++sequences;
            c.that(t.size() == 3, fmt::format("n={} mask={} gave {} elements", n, mask, t.size()));
            std::size_t sum = 0;
            for (const auto& e : t) sum += e.m;
            c.that(sum == 4 + 2 * (n - 2), fmt::format("n={} mask={} m_sum={}", n, mask, sum));
        }
    }
    const auto x = surviving_triplet(3, bases_of(3, 0));
    const auto y = surviving_triplet(3, bases_of(3, 1));
    c.that(x.size() == 3 && x[0].m == 1 && x[1].m == 2 && x[2].m == 3, "n=3 X triplet is not {1,2,3}");
    c.that(y.size() == 3 && y[0].m == 2 && y[1].m == 2 && y[2].m == 2, "n=3 Y triplet is not {2,2,2}");
    return c.result(fmt::format("{} sequences, all with three elements", sequences));
}

// Restricted to lambda >= 1/2 (z >= 1 - 1/n): below that the direct bound
// can exceed the clamped segment floor.
Verdict criterion_5() {
    Check c;
    const std::vector<double> zs{0.86, 0.88, 0.9, 0.92, 0.95, 0.97, 0.99, 1.0};
    std::size_t count = 0;
    for (std::size_t n = 3; n <= 7; ++n) {
        for (double z : zs) {
            const auto rho = wc_state(n, wc_lambda(z, int(n)));
            for (unsigned mask = 0; mask < (1u << (n - 2)); ++mask) {
                const auto t = surviving_triplet(n, bases_of(n, mask));
                const double b =
                    direct_bound(expectation(rho, t[0].op), expectation(rho, t[1].op), expectation(rho, t[2].op));
                c.near(b, le_floor_segment(z, int(n)), 1e-10, fmt::format("n={} z={} mask={}", n, z, mask));
                ++count;
            }
        }
    }
    return c.result(fmt::format("{} cases, max deviation {:.2e}", count, c.worst));
}

Verdict criterion_6() {
    Check c;
    std::size_t physical = 0;
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            for (int k = 0; k < 20; ++k) {
                const TripletValues t{i / 19.0, j / 19.0, k / 19.0};
                if (t.sum() > 1 + 2 * std::min({t.t1, t.t2, t.t3}) + 1e-12) continue;
                ++physical;
                const auto rho = t_state(t);
                c.near(t_state_concurrence(t), concurrence(rho), 1e-10, "t-state vs concurrence");
                // A t-state equals its spin flip, so the Wootters roots are its own
                // eigenvalues and C = max{0, 2 l_max - 1}.
                const oracle::Mat yy = oracle::pauli_string("YY");
                const oracle::Mat m = rho.matrix();
                c.that((yy * m.conjugate() * yy - m).norm() < 1e-14, "t-state is not spin-flip invariant");
                const double top = Eigen::SelfAdjointEigenSolver<oracle::Mat>(m).eigenvalues().maxCoeff();
                c.near(t_state_concurrence(t), std::max(0.0, 2 * top - 1), 1e-10, "t-state vs Bell-diagonal oracle");
            }
        }
    }
    std::mt19937 rng(2024);
    const char letters[] = "IXYZ";
    int instances = 0;
    double min_slack = 1e9;
    while (instances < 500) {
        const int n = 1 + int(rng() % 3);
        std::string a, b;
        for (int q = 0; q < n; ++q) {
            a += letters[rng() % 4];
            b += letters[rng() % 4];
        }
        const oracle::Mat pa = oracle::pauli_string(a), pb = oracle::pauli_string(b);
        if ((pa * pb - pb * pa).norm() > 1e-12) continue;
        // Mixture of two random pure states.
        const oracle::Vec u = oracle::random_state(n, rng()), v = oracle::random_state(n, rng());
        const double w = std::uniform_real_distribution<double>(0, 1)(rng);
        const oracle::Mat rho = w * u * u.adjoint() + (1 - w) * v * v.adjoint();
        const double ea = (rho * pa).trace().real(), eb = (rho * pb).trace().real();
        const double eab = (rho * pa * pb).trace().real();
        const double slack = eab - pairwise_floor(ea, eb);
        min_slack = std::min(min_slack, slack);
        c.that(slack >= -1e-10, fmt::format("pairwise floor violated for {} {}: slack {:.3e}", a, b, slack));
        ++instances;
    }
    return c.result(fmt::format("{} physical grid points, {} Pauli instances, min slack {:.2e}", physical, instances,
                                min_slack));
}

Verdict criterion_7() {
    Check c;
    const std::vector<double> lambdas{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> thetas;
    for (int i = 0; i < 9; ++i) thetas.push_back(kPi * i / 8);
    const auto table = wc4_grid_compare(lambdas, thetas, thetas);
    c.that(table.rows.size() == 405, "grid is not 5x9x9");
    c.that(table.max_deviation < 1e-8, fmt::format("max deviation {:.3e}", table.max_deviation));
    for (double lambda : lambdas) {
        double best = -1.0, at_equator = -1.0;
        for (const auto& r : table.rows) {
            if (r.lambda != lambda) continue;
            best = std::max(best, r.simulated);
            if (std::abs(r.theta2 - kPi / 2) < 1e-12 && std::abs(r.theta3 - kPi / 2) < 1e-12) at_equator = r.simulated;
        }
        c.near(best, std::max(0.0, 2 * lambda - 1), 1e-8, fmt::format("maximum at lambda={}", lambda));
        c.near(at_equator, best, 1e-8, fmt::format("S=1 value at lambda={}", lambda));
    }
    return c.result(fmt::format("405 points, max deviation {:.2e}", table.max_deviation));
}

Verdict criterion_8() {
    Check c;
    OptimizerConfig cfg;
    std::string values;
    for (double lambda : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
        const auto r = maximize_le(wc_state(7, lambda), cfg, LocalizeMode::Postselected);
        c.near(r.best_value, 2 * lambda - 1, 1e-4, fmt::format("lambda={}", lambda));
        // At lambda = 1/2 the objective is flat at zero. At lambda = 1 the pure
        // chain reaches concurrence 1 on the all-zero outcome off the equator
        // as well, so the maximizer is not unique at either end.
        if (lambda > 0.5 && lambda < 1.0) {
            for (double theta : r.best_angles.theta) {
                c.that(std::abs(theta - kPi / 2) <= 1e-3,
                       fmt::format("lambda={} theta={:.6f} is off the equator", lambda, theta));
            }
        }
        values += fmt::format("{}{:.6f}", values.empty() ? "" : " ", r.best_value);
    }
    return c.result("best values " + values);
}

Verdict criterion_9() {
    Check c;
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    double worst_excess = -1.0;
    for (double lambda : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
        const double ceiling = std::max(0.0, 2 * lambda - 1);
        for (std::size_t n = 3; n <= 7; ++n) {
            for (int t = 0; t < 50; ++t) {
                std::vector<double> phi(n - 2);
                std::vector<int> s(n - 2);
                for (auto& p : phi) p = angle(rng);
                for (auto& b : s) b = int(rng() & 1u);
                const double value = equatorial_check(lambda, n, phi, s);
                worst_excess = std::max(worst_excess, value - ceiling);
                c.that(value <= ceiling + 1e-9,
                       fmt::format("lambda={} n={} value {:.12g} above {:.12g}", lambda, n, value, ceiling));
            }
        }
    }
    return c.result(fmt::format("1500 sequences, max excess over ceiling {:.2e}", worst_excess));
}

Verdict criterion_10() {
    Check c;
    for (int zi = 0; zi <= 20; ++zi) {
        const double z = 0.8 + 0.01 * zi;
        for (std::size_t n = 3; n <= 12; ++n) {
            // Triplet floor from the surviving elements of an all-Y sequence.
            const auto t = surviving_triplet(n, std::vector<MeasurementBasis>(n - 2, MeasurementBasis::Y));
            double triplet_sum = 0.0;
            for (const auto& e : t) triplet_sum += backbone_floor_raw(e.m, z);
            const double via_fef = teleport_fidelity(fef_floor_from_triplet(triplet_sum));
            c.near(via_fef, teleport_floor_raw(z, int(n)), 1e-12, fmt::format("z={} n={}", z, n));
        }
    }
    oracle::Vec bell = oracle::Vec::Zero(4);
    bell(0) = bell(3) = 1 / std::sqrt(2.0);
    const Eigen::Matrix4cd bell_rho = bell * bell.adjoint();
    c.near(fully_entangled_fraction(TwoQubitState(bell_rho)), 1.0, 1e-12, "FEF of Bell state");
    c.near(fully_entangled_fraction(TwoQubitState(Eigen::Matrix4cd::Identity() / 4.0)), 0.25, 1e-12,
           "FEF of maximally mixed state");
    c.near(teleport_fidelity(0.25), 0.5, 1e-15, "teleport_fidelity(1/4)");
    return c.result(fmt::format("210 (z, n) points, max deviation {:.2e}", c.worst));
}

Verdict criterion_11() {
    Check c;
    std::size_t count = 0;
    for (std::size_t photons = 2; photons <= 7; ++photons) {
        for (double p : {0.0, 0.02, 0.1, 0.3}) {
            const SourceParams params{photons, p};
            const auto rho = emit_state(params);
            const auto gens = cluster_generators(photons + 1);
            std::vector<std::uint8_t> e(photons + 1);
            for (unsigned mask = 1; mask < (1u << (photons + 1)); ++mask) {
                for (std::size_t i = 0; i <= photons; ++i) e[i] = (mask >> i) & 1u;
                const auto el = compose_exponents(gens, e);
                c.near(correlator_analytic(el.op, params), expectation(rho, el.op), 1e-10,
                       fmt::format("photons={} p={} {}", photons, p, el.op.str()));
                ++count;
            }
        }
    }
    // Spot check the emission itself against explicit matrices.
    {
        const int photons = 4;
        const double p = 0.1;
        const int n = photons + 1;
        const oracle::Mat h = oracle::on_qubit(oracle::pauli('X') + oracle::pauli('Z'), photons, n) / std::sqrt(2.0);
        const oracle::Mat y = oracle::on_qubit(oracle::pauli('Y'), photons, n);
        oracle::Vec init = oracle::Vec::Zero(1 << n);
        init(0) = init(1) = 1 / std::sqrt(2.0);
        oracle::Mat ref = init * init.adjoint();
        for (int j = 0; j < photons; ++j) {
            ref = (1 - p) * ref + p * y * ref * y.adjoint();
            const oracle::Mat u = h * oracle::cnot(photons, j, n);
            ref = u * ref * u.adjoint();
        }
        const auto gens = cluster_generators(n);
        for (const auto& g : gens.generators) {
            c.near(correlator_analytic(g, {std::size_t(photons), p}), (ref * dense(g)).trace().real(), 1e-10,
                   "oracle " + g.str());
        }
    }

    std::vector<double> grid;
    for (int i = 0; i < 30; ++i) grid.push_back(0.1 * i / 29);
    const auto rows = compare_ranges(grid, 20);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        c.that(rows[i].direct_range >= rows[i].zxz_range, fmt::format("p={} direct range below ZXZ range", grid[i]));
        if (i > 0) {
            c.that(rows[i].direct_range <= rows[i - 1].direct_range, fmt::format("direct range rises at p={}", grid[i]));
            c.that(rows[i].zxz_range <= rows[i - 1].zxz_range, fmt::format("ZXZ range rises at p={}", grid[i]));
        }
    }
    double prev_gap = 1.0;
    for (double p : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        const auto v = le3_values(p);
        const double gap = v.direct - v.zxz;
        c.that(gap >= -1e-12 && gap < prev_gap, fmt::format("gap at p={} is {:.3e}", p, gap));
        prev_gap = gap;
    }
    c.that(prev_gap < 1e-4, fmt::format("gap at p=1e-6 is {:.3e}", prev_gap));
    return c.result(fmt::format("{} correlators, max deviation {:.2e}; 30-point ranges ordered and monotone", count,
                                c.worst));
}

Verdict criterion_12() {
    Check c;
    const double z = 0.9;
    const auto rho = wc_state(5, wc_lambda(z, 5));
    int covered = 0;
    for (int rep = 0; rep < 100; ++rep) {
        ExperimentPlan plan;
        plan.basis_cycle = {"ZXZ"};
        plan.efficiency = 1.0;
        plan.windows = 2000;
        plan.seed = 5000 + std::uint64_t(rep);
        const auto est = simulate_estimate(rho, plan, 0.01);
        covered += est.ci_low <= z && z <= est.ci_high;
    }
    c.that(covered >= 94, fmt::format("coverage {} / 100", covered));
    const auto complete = plan_samples(1.0, 0.01, 0.01);
    const auto lossy = plan_samples(0.01, 0.01, 0.01);
    c.that(complete.complete_triples == 26492, fmt::format("complete triples {}", complete.complete_triples));
    c.that(lossy.windows == 26492000000ull, fmt::format("windows {}", lossy.windows));
    return c.result(fmt::format("coverage {} / 100, plan {} triples / {} windows", covered, complete.complete_triples,
                                lossy.windows));
}

struct Criterion {
    int id;
    double budget_s;  // 0: no runtime limit
    std::function<Verdict()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, 1, criterion_1},     {2, 30, criterion_2},   {3, 0, criterion_3},    {4, 10, criterion_4},
        {5, 0, criterion_5},     {6, 0, criterion_6},    {7, 0, criterion_7},    {8, 300, criterion_8},
        {9, 0, criterion_9},     {10, 0, criterion_10},  {11, 0, criterion_11},  {12, 120, criterion_12},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.pass && c.budget_s > 0 && secs > c.budget_s) {
            out = {false, fmt::format("took {:.2f} s, limit {} s", secs, c.budget_s)};
        }
        failed += !out.pass;
        fmt::print("criterion {:2}: {} ({:.2f} s) {}\n", c.id, out.pass ? "PASS" : "FAIL", secs, out.detail);
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - std::size_t(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
