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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "clustercert/kernels.hpp"
#include "dense_oracle.hpp"

namespace kn = clustercert::kernels;
using kn::cplx;

namespace {

std::vector<cplx> random_vector(unsigned n, unsigned seed) {
    const auto v = oracle::random_state(int(n), seed);
    return std::vector<cplx>(v.data(), v.data() + v.size());
}

oracle::Vec as_vec(const std::vector<cplx>& v) { return Eigen::Map<const oracle::Vec>(v.data(), Eigen::Index(v.size())); }

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

const kn::Gate2x2 kGate{cplx(0.6, 0.1), cplx(0.2, -0.3), cplx(-0.5, 0.4), cplx(0.1, 0.7)};

oracle::Mat gate_matrix(const kn::Gate2x2& g) {
    oracle::Mat m(2, 2);
    m << g[0], g[1], g[2], g[3];
    return m;
}

}  // namespace

// Registers above the dispatch threshold so the OpenMP path is exercised.
class KernelsSerialVsOmp : public ::testing::TestWithParam<unsigned> {};

TEST_P(KernelsSerialVsOmp, Agree) {
    const unsigned n = GetParam();
    const auto v = random_vector(n, n);
    const std::uint64_t xm = 0b1011ull << (n - 5), zm = 0b0110ull << 2;
    EXPECT_LT(std::abs(kn::serial::xz_expectation(v, xm, zm) - kn::omp::xz_expectation(v, xm, zm)), 1e-12);
    EXPECT_NEAR(kn::serial::norm_squared(v), kn::omp::norm_squared(v), 1e-12);

    for (unsigned q : {0u, n / 2, n - 1}) {
        std::vector<cplx> a(v.size() / 2), b(v.size() / 2);
        kn::serial::contract_qubit(v, n, q, cplx(0.3, 0.1), cplx(-0.2, 0.9), a);
        kn::omp::contract_qubit(v, n, q, cplx(0.3, 0.1), cplx(-0.2, 0.9), b);
        EXPECT_LT(max_diff(a, b), 1e-14);

        auto s = v, o = v;
        kn::serial::apply_1q(s, n, q, kGate);
        kn::omp::apply_1q(o, n, q, kGate);
        EXPECT_LT(max_diff(s, o), 1e-14);
    }
    const auto ps = kn::serial::reduce_pair(v, n, 1, n - 2);
    const auto po = kn::omp::reduce_pair(v, n, 1, n - 2);
    for (std::size_t i = 0; i < 16; ++i) EXPECT_LT(std::abs(ps[i] - po[i]), 1e-12);

    auto s = v, o = v;
    kn::serial::apply_cz(s, n, 2, 5);
    kn::omp::apply_cz(o, n, 2, 5);
    EXPECT_LT(max_diff(s, o), 1e-15);
    kn::serial::apply_cnot(s, n, 5, 1);
    kn::omp::apply_cnot(o, n, 5, 1);
    EXPECT_LT(max_diff(s, o), 1e-15);

    const std::vector<unsigned> qs{3, 0, n - 1};
    std::vector<double> ms(8), mo(8);
    kn::serial::marginal_probabilities(v, n, qs, ms);
    kn::omp::marginal_probabilities(v, n, qs, mo);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(ms[i], mo[i], 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelsSerialVsOmp, ::testing::Values(12u, 13u, 15u));

TEST(KernelsOracle, ExpectationMatchesDenseOperator) {
    const unsigned n = 4;
    const auto v = random_vector(n, 5);
    // X^x Z^z with x on qubits 0,2 and z on qubits 2,3.
    const oracle::Mat op = oracle::on_qubit(oracle::pauli('X'), 0, n) * oracle::on_qubit(oracle::pauli('X'), 2, n) *
                           oracle::on_qubit(oracle::pauli('Z'), 2, n) * oracle::on_qubit(oracle::pauli('Z'), 3, n);
    const cplx expected = as_vec(v).dot(op * as_vec(v));
    EXPECT_LT(std::abs(kn::serial::xz_expectation(v, 0b1010, 0b0011) - expected), 1e-12);
}

TEST(KernelsOracle, GatesMatchDenseMatrices) {
    const unsigned n = 4;
    const auto v = random_vector(n, 6);
    for (unsigned q = 0; q < n; ++q) {
        auto w = v;
        kn::serial::apply_1q(w, n, q, kGate);
        EXPECT_LT((as_vec(w) - oracle::on_qubit(gate_matrix(kGate), int(q), int(n)) * as_vec(v)).norm(), 1e-12);
    }
    auto w = v;
    kn::serial::apply_cz(w, n, 1, 3);
    EXPECT_LT((as_vec(w) - oracle::cz(1, 3, int(n)) * as_vec(v)).norm(), 1e-12);
    w = v;
    kn::serial::apply_cnot(w, n, 3, 0);
    EXPECT_LT((as_vec(w) - oracle::cnot(3, 0, int(n)) * as_vec(v)).norm(), 1e-12);
}

TEST(KernelsOracle, ContractReduceMarginal) {
    const unsigned n = 4;
    const auto v = random_vector(n, 8);
    oracle::Vec ket(2);
    ket << cplx(0.6, 0.0), cplx(0.0, 0.8);
    std::vector<cplx> out(8);
    kn::serial::contract_qubit(v, n, 2, std::conj(ket(0)), std::conj(ket(1)), out);
    EXPECT_LT((as_vec(out) - oracle::bra_on(ket, 2, int(n)) * as_vec(v)).norm(), 1e-12);

    const oracle::Mat rho = as_vec(v) * as_vec(v).adjoint();
    const auto pair = kn::serial::reduce_pair(v, n, 1, 3);
    const oracle::Mat expected = oracle::keep_pair(rho, 1, 3, int(n));
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) EXPECT_LT(std::abs(pair[std::size_t(4 * r + c)] - expected(r, c)), 1e-12);
    }
    // reduce_pair with a > b swaps the tensor factors.
    const auto swapped = kn::serial::reduce_pair(v, n, 3, 1);
    EXPECT_LT(std::abs(swapped[1 * 4 + 2] - expected(2, 1)), 1e-12);

    const std::vector<unsigned> qs{2, 0};
    std::vector<double> probs(4);
    kn::serial::marginal_probabilities(v, n, qs, probs);
    for (int k = 0; k < 4; ++k) {
        double acc = 0.0;
        for (int b = 0; b < 16; ++b) {
            const int bit2 = (b >> 1) & 1, bit0 = (b >> 3) & 1;
            if (2 * bit2 + bit0 == k) acc += std::norm(v[std::size_t(b)]);
        }
        EXPECT_NEAR(probs[std::size_t(k)], acc, 1e-12);
    }
}
