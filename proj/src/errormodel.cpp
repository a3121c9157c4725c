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

#include "clustercert/errormodel.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "clustercert/bounds.hpp"
#include "clustercert/errors.hpp"
#include "clustercert/kernels.hpp"

namespace clustercert {

namespace {

// Floors at or below this are treated as "no certified entanglement".
constexpr double kPositive = 1e-12;

const kernels::Gate2x2 kHadamard{std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2,
                                 -std::numbers::sqrt2 / 2};
const kernels::Gate2x2 kPauliY{0.0, cplx(0, -1), cplx(0, 1), 0.0};

PureState run_emission(std::size_t n_photons, std::uint64_t error_pattern) {
    const std::size_t width = n_photons + 1;
    const auto w = static_cast<unsigned>(width);
    const unsigned spin = w - 1;
    std::vector<cplx> amps(std::size_t{1} << width, 0.0);
    amps[0] = std::numbers::sqrt2 / 2;  // |0...0>|+>
    amps[1] = std::numbers::sqrt2 / 2;
    for (unsigned j = 0; j < n_photons; ++j) {
        if ((error_pattern >> j) & 1u) kernels::apply_1q(amps, w, spin, kPauliY);
        kernels::apply_cnot(amps, w, spin, j);
        kernels::apply_1q(amps, w, spin, kHadamard);
    }
    return PureState::unchecked(width, std::move(amps));
}

}  // namespace

void validate(const SourceParams& params) {
    if (params.n_photons < 1) throw DomainError("source needs at least one photon");
    if (!(params.p_y >= 0.0 && params.p_y <= 0.5)) throw DomainError("p_y must lie in [0, 1/2]");
}

Ensemble emit_state(const SourceParams& params) {
    validate(params);
    if (params.n_photons > params.dense_limit || params.chain_length() > dense_limit()) {
        throw ResourceError("emit_state: " + std::to_string(params.n_photons) +
                            " photons exceed the dense limit; use correlator_analytic");
    }
    const std::size_t n = params.n_photons;
    const std::uint64_t patterns = std::uint64_t{1} << n;
    std::vector<Branch> branches(patterns);
    std::vector<char> present(patterns, 0);
    const auto count = static_cast<std::int64_t>(patterns);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto pattern = static_cast<std::uint64_t>(i);
        const int errors = std::popcount(pattern);
        const double weight =
            std::pow(params.p_y, errors) * std::pow(1.0 - params.p_y, static_cast<double>(n) - errors);
        if (weight <= 0.0) continue;
        branches[pattern] = Branch{weight, run_emission(n, pattern)};
        present[pattern] = 1;
    }
    std::vector<Branch> kept;
    double total = 0.0;
    for (std::uint64_t k = 0; k < patterns; ++k) {
        if (present[k]) {
            total += branches[k].weight;
            kept.push_back(std::move(branches[k]));
        }
    }
    for (auto& b : kept) b.weight /= total;
    return Ensemble(std::move(kept));
}

double correlator_analytic(const PauliString& op, const SourceParams& params) {
    validate(params);
    const std::size_t width = params.chain_length();
    if (op.n_qubits() != width) throw DimensionError("operator size must be n_photons + 1");
    StabilizerElement element;
    int sign = 0;
    if (!decompose_cluster_stabilizer(op, element, sign)) {
        throw DomainError("correlator_analytic: " + op.str() + " is not a stabilizer of the ideal chain");
    }

    std::vector<std::uint8_t> x(width), z(width);
    for (std::size_t q = 0; q < width; ++q) {
        x[q] = op.x(q);
        z[q] = op.z(q);
    }
    const std::size_t spin = width - 1;
    const double factor = 1.0 - 2.0 * params.p_y;
    double value = sign;
    for (std::size_t j = params.n_photons; j-- > 0;) {
        std::swap(x[spin], z[spin]);  // H on the spin
        x[j] ^= x[spin];              // CNOT spin -> photon j
        z[spin] ^= z[j];
        // The error site sits just before this CNOT.
        if (x[spin] != z[spin]) value *= factor;
    }
    return value;
}

double source_zxz(double p_y) {
    const SourceParams params{4, p_y, 4};
    const auto gens = cluster_generators(params.chain_length());
    return correlator_analytic(gens[1], params);
}

std::array<double, 3> source_y_chain_triplet(double p_y, int measured, std::size_t window_offset) {
    if (measured < 1) throw DomainError("need at least one measured photon");
    if (window_offset < 1) throw DomainError("the segment needs a clipped photon on its left");
    const std::size_t segment = static_cast<std::size_t>(measured) + 2;
    // Right neighbour plus two more photons keep the segment away from the spin.
    const SourceParams params{window_offset + segment + 3, p_y, 0};
    const std::size_t width = params.chain_length();
    const auto chain_gens = cluster_generators(width);

    const std::vector<MeasurementBasis> bases(static_cast<std::size_t>(measured), MeasurementBasis::Y);
    const auto triplet = surviving_triplet(segment, bases);
    std::array<double, 3> values{};
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<std::size_t> idx;
        for (auto g : triplet[i].generator_indices) idx.push_back(g + window_offset);
        values[i] = correlator_analytic(compose(chain_gens, idx).op, params);
    }
    return values;
}

double source_direct_bound(double p_y, int measured) {
    const auto t = source_y_chain_triplet(p_y, measured);
    return direct_bound(t[0], t[1], t[2]);
}

RangeRow compare_range(double p, int max_span) {
    if (max_span < 1) throw DomainError("max_span must be at least 1");
    RangeRow row;
    row.p = p;
    row.zxz_value = source_zxz(p);
    for (int m = 1; m <= max_span; ++m) {
        if (le_floor_pair_raw(row.zxz_value, m + 1) > kPositive) row.zxz_range = m;
        if (source_direct_bound(p, m) > kPositive) row.direct_range = m;
    }
    const auto le3 = le3_values(p);
    row.le3_direct = le3.direct;
    row.le3_zxz = le3.zxz;
    return row;
}

std::vector<RangeRow> compare_ranges(std::span<const double> p_grid, int max_span) {
    std::vector<RangeRow> rows(p_grid.size());
    const auto count = static_cast<std::int64_t>(p_grid.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) rows[i] = compare_range(p_grid[i], max_span);
    return rows;
}

Le3Values le3_values(double p) {
    return {source_direct_bound(p, 3), le_floor_segment(source_zxz(p), 5)};
}

Le3Crossings le3_crossings(double tolerance) {
    auto bisect = [tolerance](auto&& f) {
        double lo = 0.0;   // f(lo) > 0
        double hi = 0.5;   // f(hi) <= 0
        while (hi - lo > tolerance) {
            const double mid = 0.5 * (lo + hi);
            (f(mid) > 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    Le3Crossings c;
    c.direct = bisect([](double p) {
        const auto t = source_y_chain_triplet(p, 3);
        return t[0] + t[1] + t[2] - 1.0;
    });
    c.zxz = bisect([](double p) { return le_floor_segment_raw(source_zxz(p), 5); });
    return c;
}

}  // namespace clustercert
