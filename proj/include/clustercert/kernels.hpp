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

// Data-parallel state-vector kernels.
//
// Every kernel exists twice with identical signatures: `serial::` is the
// reference implementation used by the tests, `omp::` is the OpenMP version.
// The unqualified functions in `kernels::` dispatch on register size.
//
// Amplitude index convention: qubit q of an n-qubit register is bit (n-1-q),
// so qubit 0 is the most significant bit.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace clustercert::kernels {

using cplx = std::complex<double>;
using Gate2x2 = std::array<cplx, 4>;      // row-major
using Pair4x4 = std::array<cplx, 16>;     // row-major, index 2a+b

/// Registers at least this large use the OpenMP kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

#define CLUSTERCERT_KERNEL_DECLS                                                                     \
    /* sum_b conj(psi[b ^ xmask]) * (-1)^{popcount(b & zmask)} * psi[b] */                           \
    cplx xz_expectation(std::span<const cplx> amps, std::uint64_t xmask, std::uint64_t zmask);        \
    double norm_squared(std::span<const cplx> amps);                                                  \
    /* out[hi,lo] = bra0 * in[hi,0,lo] + bra1 * in[hi,1,lo]; out has half the size of in */           \
    void contract_qubit(std::span<const cplx> in, unsigned n, unsigned q, cplx bra0, cplx bra1,      \
                        std::span<cplx> out);                                                         \
    /* unnormalized rho_ab = Tr_rest |psi><psi| */                                                    \
    Pair4x4 reduce_pair(std::span<const cplx> amps, unsigned n, unsigned a, unsigned b);             \
    void apply_1q(std::span<cplx> amps, unsigned n, unsigned q, const Gate2x2& u);                   \
    void apply_cz(std::span<cplx> amps, unsigned n, unsigned a, unsigned b);                         \
    void apply_cnot(std::span<cplx> amps, unsigned n, unsigned control, unsigned target);            \
    /* out[k] = sum of |psi[b]|^2 over b whose bits at `qubits` spell k (first qubit most significant) */ \
    void marginal_probabilities(std::span<const cplx> amps, unsigned n, std::span<const unsigned> qubits, \
                                std::span<double> out);

namespace serial {
CLUSTERCERT_KERNEL_DECLS
}  // namespace serial

namespace omp {
CLUSTERCERT_KERNEL_DECLS
}  // namespace omp

CLUSTERCERT_KERNEL_DECLS

#undef CLUSTERCERT_KERNEL_DECLS

/// Number of threads the OpenMP kernels will use.
int omp_threads();

}  // namespace clustercert::kernels
