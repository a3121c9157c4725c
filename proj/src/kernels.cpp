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

#include "clustercert/kernels.hpp"

namespace clustercert::kernels {

namespace {
bool use_parallel(std::size_t size) { return size >= kParallelThreshold; }
}  // namespace

cplx xz_expectation(std::span<const cplx> amps, std::uint64_t xmask, std::uint64_t zmask) {
    return use_parallel(amps.size()) ? omp::xz_expectation(amps, xmask, zmask)
                                     : serial::xz_expectation(amps, xmask, zmask);
}

double norm_squared(std::span<const cplx> amps) {
    return use_parallel(amps.size()) ? omp::norm_squared(amps) : serial::norm_squared(amps);
}

void contract_qubit(std::span<const cplx> in, unsigned n, unsigned q, cplx bra0, cplx bra1,
                    std::span<cplx> out) {
    if (use_parallel(in.size())) {
        omp::contract_qubit(in, n, q, bra0, bra1, out);
    } else {
        serial::contract_qubit(in, n, q, bra0, bra1, out);
    }
}

Pair4x4 reduce_pair(std::span<const cplx> amps, unsigned n, unsigned a, unsigned b) {
    return use_parallel(amps.size()) ? omp::reduce_pair(amps, n, a, b) : serial::reduce_pair(amps, n, a, b);
}

void apply_1q(std::span<cplx> amps, unsigned n, unsigned q, const Gate2x2& u) {
    if (use_parallel(amps.size())) {
        omp::apply_1q(amps, n, q, u);
    } else {
        serial::apply_1q(amps, n, q, u);
    }
}

void apply_cz(std::span<cplx> amps, unsigned n, unsigned a, unsigned b) {
    if (use_parallel(amps.size())) {
        omp::apply_cz(amps, n, a, b);
    } else {
        serial::apply_cz(amps, n, a, b);
    }
}

void apply_cnot(std::span<cplx> amps, unsigned n, unsigned control, unsigned target) {
    if (use_parallel(amps.size())) {
        omp::apply_cnot(amps, n, control, target);
    } else {
        serial::apply_cnot(amps, n, control, target);
    }
}

void marginal_probabilities(std::span<const cplx> amps, unsigned n, std::span<const unsigned> qubits,
                            std::span<double> out) {
    if (use_parallel(amps.size())) {
        omp::marginal_probabilities(amps, n, qubits, out);
    } else {
        serial::marginal_probabilities(amps, n, qubits, out);
    }
}

}  // namespace clustercert::kernels
