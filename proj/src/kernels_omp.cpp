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

#include <omp.h>

#include <bit>
#include <vector>

#include "clustercert/kernels.hpp"

namespace clustercert::kernels {

int omp_threads() { return omp_get_max_threads(); }

namespace omp {

cplx xz_expectation(std::span<const cplx> amps, std::uint64_t xmask, std::uint64_t zmask) {
    const auto size = static_cast<std::int64_t>(amps.size());
    double re = 0.0;
    double im = 0.0;
#pragma omp parallel for reduction(+ : re, im) schedule(static)
    for (std::int64_t i = 0; i < size; ++i) {
        const auto b = static_cast<std::uint64_t>(i);
        const cplx term = std::conj(amps[b ^ xmask]) * amps[b];
        const double s = (std::popcount(b & zmask) & 1) ? -1.0 : 1.0;
        re += s * term.real();
        im += s * term.imag();
    }
    return {re, im};
}

double norm_squared(std::span<const cplx> amps) {
    const auto size = static_cast<std::int64_t>(amps.size());
    double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (std::int64_t i = 0; i < size; ++i) acc += std::norm(amps[i]);
    return acc;
}

void contract_qubit(std::span<const cplx> in, unsigned n, unsigned q, cplx bra0, cplx bra1,
                    std::span<cplx> out) {
    const unsigned low_bits = n - 1 - q;
    const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
    const auto size = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < size; ++i) {
        const auto k = static_cast<std::uint64_t>(i);
        const std::uint64_t i0 = ((k >> low_bits) << (low_bits + 1)) | (k & low_mask);
        const std::uint64_t i1 = i0 | (std::uint64_t{1} << low_bits);
        out[k] = bra0 * in[i0] + bra1 * in[i1];
    }
}

Pair4x4 reduce_pair(std::span<const cplx> amps, unsigned n, unsigned a, unsigned b) {
    const std::uint64_t ma = std::uint64_t{1} << (n - 1 - a);
    const std::uint64_t mb = std::uint64_t{1} << (n - 1 - b);
    const auto size = static_cast<std::int64_t>(amps.size());
    double acc[32] = {};
#pragma omp parallel for reduction(+ : acc[:32]) schedule(static)
    for (std::int64_t i = 0; i < size; ++i) {
        const auto base = static_cast<std::uint64_t>(i);
        if (base & (ma | mb)) continue;
        cplx v[4];
        for (unsigned k = 0; k < 4; ++k) {
            v[k] = amps[base | ((k & 2u) ? ma : 0) | ((k & 1u) ? mb : 0)];
        }
        for (unsigned r = 0; r < 4; ++r) {
            for (unsigned c = 0; c < 4; ++c) {
                const cplx t = v[r] * std::conj(v[c]);
                acc[2 * (4 * r + c)] += t.real();
                acc[2 * (4 * r + c) + 1] += t.imag();
            }
        }
    }
    Pair4x4 rho;
    for (unsigned k = 0; k < 16; ++k) rho[k] = {acc[2 * k], acc[2 * k + 1]};
    return rho;
}

void apply_1q(std::span<cplx> amps, unsigned n, unsigned q, const Gate2x2& u) {
    const unsigned low_bits = n - 1 - q;
    const std::uint64_t m = std::uint64_t{1} << low_bits;
    const std::uint64_t low_mask = m - 1;
    const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < pairs; ++i) {
        const auto k = static_cast<std::uint64_t>(i);
        const std::uint64_t b = ((k >> low_bits) << (low_bits + 1)) | (k & low_mask);
        const cplx a0 = amps[b];
        const cplx a1 = amps[b | m];
        amps[b] = u[0] * a0 + u[1] * a1;
        amps[b | m] = u[2] * a0 + u[3] * a1;
    }
}

void apply_cz(std::span<cplx> amps, unsigned n, unsigned a, unsigned b) {
    const std::uint64_t m = (std::uint64_t{1} << (n - 1 - a)) | (std::uint64_t{1} << (n - 1 - b));
    const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < size; ++i) {
        if ((static_cast<std::uint64_t>(i) & m) == m) amps[i] = -amps[i];
    }
}

void apply_cnot(std::span<cplx> amps, unsigned n, unsigned control, unsigned target) {
    const std::uint64_t mc = std::uint64_t{1} << (n - 1 - control);
    const std::uint64_t mt = std::uint64_t{1} << (n - 1 - target);
    const auto size = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < size; ++i) {
        const auto b = static_cast<std::uint64_t>(i);
        if ((b & mc) && !(b & mt)) std::swap(amps[b], amps[b | mt]);
    }
}

void marginal_probabilities(std::span<const cplx> amps, unsigned n, std::span<const unsigned> qubits,
                            std::span<double> out) {
    const auto size = static_cast<std::int64_t>(amps.size());
    const auto bins = static_cast<int>(out.size());
    std::vector<double> acc(out.size(), 0.0);
    double* data = acc.data();
#pragma omp parallel for reduction(+ : data[:bins]) schedule(static)
    for (std::int64_t i = 0; i < size; ++i) {
        const auto b = static_cast<std::uint64_t>(i);
        std::uint64_t key = 0;
        for (unsigned q : qubits) key = (key << 1) | ((b >> (n - 1 - q)) & 1u);
        data[key] += std::norm(amps[b]);
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = acc[k];
}

}  // namespace omp
}  // namespace clustercert::kernels
