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

#include <bit>

#include "clustercert/kernels.hpp"

namespace clustercert::kernels::serial {

cplx xz_expectation(std::span<const cplx> amps, std::uint64_t xmask, std::uint64_t zmask) {
    cplx acc = 0.0;
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        const cplx term = std::conj(amps[b ^ xmask]) * amps[b];
        acc += (std::popcount(b & zmask) & 1) ? -term : term;
    }
    return acc;
}

double norm_squared(std::span<const cplx> amps) {
    double acc = 0.0;
    for (const auto& a : amps) acc += std::norm(a);
    return acc;
}

void contract_qubit(std::span<const cplx> in, unsigned n, unsigned q, cplx bra0, cplx bra1,
                    std::span<cplx> out) {
    const unsigned low_bits = n - 1 - q;
    const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
    for (std::uint64_t k = 0; k < out.size(); ++k) {
        const std::uint64_t hi = k >> low_bits;
        const std::uint64_t lo = k & low_mask;
        const std::uint64_t i0 = (hi << (low_bits + 1)) | lo;
        const std::uint64_t i1 = i0 | (std::uint64_t{1} << low_bits);
        out[k] = bra0 * in[i0] + bra1 * in[i1];
    }
}

Pair4x4 reduce_pair(std::span<const cplx> amps, unsigned n, unsigned a, unsigned b) {
    const std::uint64_t ma = std::uint64_t{1} << (n - 1 - a);
    const std::uint64_t mb = std::uint64_t{1} << (n - 1 - b);
    Pair4x4 rho{};
    for (std::uint64_t base = 0; base < amps.size(); ++base) {
        if (base & (ma | mb)) continue;
        std::array<cplx, 4> v;
        for (unsigned k = 0; k < 4; ++k) {
            v[k] = amps[base | ((k & 2u) ? ma : 0) | ((k & 1u) ? mb : 0)];
        }
        for (unsigned r = 0; r < 4; ++r) {
            for (unsigned c = 0; c < 4; ++c) rho[4 * r + c] += v[r] * std::conj(v[c]);
        }
    }
    return rho;
}

void apply_1q(std::span<cplx> amps, unsigned n, unsigned q, const Gate2x2& u) {
    const std::uint64_t m = std::uint64_t{1} << (n - 1 - q);
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if (b & m) continue;
        const cplx a0 = amps[b];
        const cplx a1 = amps[b | m];
        amps[b] = u[0] * a0 + u[1] * a1;
        amps[b | m] = u[2] * a0 + u[3] * a1;
    }
}

void apply_cz(std::span<cplx> amps, unsigned n, unsigned a, unsigned b) {
    const std::uint64_t m = (std::uint64_t{1} << (n - 1 - a)) | (std::uint64_t{1} << (n - 1 - b));
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & m) == m) amps[i] = -amps[i];
    }
}

void apply_cnot(std::span<cplx> amps, unsigned n, unsigned control, unsigned target) {
    const std::uint64_t mc = std::uint64_t{1} << (n - 1 - control);
    const std::uint64_t mt = std::uint64_t{1} << (n - 1 - target);
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & mc) && !(i & mt)) std::swap(amps[i], amps[i | mt]);
    }
}

void marginal_probabilities(std::span<const cplx> amps, unsigned n, std::span<const unsigned> qubits,
                            std::span<double> out) {
    for (auto& p : out) p = 0.0;
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        std::uint64_t key = 0;
        for (unsigned q : qubits) key = (key << 1) | ((b >> (n - 1 - q)) & 1u);
        out[key] += std::norm(amps[b]);
    }
}

}  // namespace clustercert::kernels::serial
