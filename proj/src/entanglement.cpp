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

#include "clustercert/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "clustercert/errors.hpp"

namespace clustercert {

namespace {

constexpr double kSpectrumClamp = 1e-9;

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
    return out;
}

const Eigen::Matrix4cd& magic_basis() {
    static const Eigen::Matrix4cd basis = [] {
        const double h = 1.0 / std::sqrt(2.0);
        const cplx i(0, 1);
        Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
        // Columns: |phi+>, i|phi->, i|psi+>, |psi->.
        m(0, 0) = h;
        m(3, 0) = h;
        m(0, 1) = i * h;
        m(3, 1) = -i * h;
        m(1, 2) = i * h;
        m(2, 2) = i * h;
        m(1, 3) = h;
        m(2, 3) = -h;
        return m;
    }();
    return basis;
}

}  // namespace

const Eigen::Matrix2cd& pauli_matrix(int k) {
    static const std::array<Eigen::Matrix2cd, 4> mats = [] {
        std::array<Eigen::Matrix2cd, 4> p;
        p[0] << 1, 0, 0, 1;
        p[1] << 0, 1, 1, 0;
        p[2] << 0, cplx(0, -1), cplx(0, 1), 0;
        p[3] << 1, 0, 0, -1;
        return p;
    }();
    return mats.at(static_cast<std::size_t>(k));
}

SignAbsorbedTriplet absorb_signs(double t1, double t2, double t3, AbsorbSide side) {
    SignAbsorbedTriplet out;
    out.side = side;
    const std::array<double, 3> raw{t1, t2, t3};
    std::array<double, 3> abs_values{};
    for (std::size_t i = 0; i < 3; ++i) {
        out.flipped[i] = raw[i] < 0.0;
        abs_values[i] = std::abs(raw[i]);
    }
    out.values = {abs_values[0], abs_values[1], abs_values[2]};
    return out;
}

TwoQubitState t_state(const TripletValues& t) {
    const auto& X = pauli_matrix(1);
    const auto& Y = pauli_matrix(2);
    const auto& Z = pauli_matrix(3);
    const Eigen::Matrix4cd rho =
        0.25 * (Eigen::Matrix4cd::Identity() + t.t1 * kron(Y, Z) + t.t2 * kron(Z, Y) + t.t3 * kron(X, X));
    return TwoQubitState(rho);
}

double t_state_concurrence(const TripletValues& t) { return std::max(0.0, 0.5 * (t.sum() - 1.0)); }

double concurrence_raw(const TwoQubitState& state) {
    // rho = A A^dagger with A = V sqrt(D); the l_i are the singular values of
    // tau = A^T (Y⊗Y) A. Square roots of tiny eigenvalues only enter tau
    // as products with the large ones, which keeps l_i accurate near zero.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(state.matrix());
    if (es.eigenvalues().minCoeff() < -kSpectrumClamp) throw InvalidStateError("state has a negative eigenvalue");
    const Eigen::Vector4d root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::Matrix4cd a = es.eigenvectors() * root.asDiagonal();
    const Eigen::Matrix4cd yy = kron(pauli_matrix(2), pauli_matrix(2));
    const Eigen::Matrix4cd tau = a.transpose() * yy * a;
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(tau);
    const Eigen::Vector4d l = svd.singularValues();  // descending
    return l(0) - l(1) - l(2) - l(3);
}

double concurrence(const TwoQubitState& rho) { return std::max(0.0, concurrence_raw(rho)); }

double fully_entangled_fraction(const TwoQubitState& rho) {
    const Eigen::Matrix4cd& b = magic_basis();
    const Eigen::Matrix4cd in_magic = b.adjoint() * rho.matrix() * b;
    const Eigen::Matrix4d re = 0.5 * (in_magic.real() + in_magic.real().transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(re, Eigen::EigenvaluesOnly);
    return std::clamp(es.eigenvalues().maxCoeff(), 0.0, 1.0);
}

double teleport_fidelity(double fef) { return (1.0 + 2.0 * fef) / 3.0; }

double x_state_concurrence_wc4(double lambda, double theta2, double theta3) {
    const double s = std::sin(theta2) * std::sin(theta3);
    return std::max(0.0, 0.5 * (3.0 * lambda - 1.0) * s + 0.5 * (lambda - 1.0));
}

Eigen::Matrix4cd BlochDecomposition::reconstruct() const {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Identity();
    for (int i = 0; i < 3; ++i) {
        rho += r(i) * kron(pauli_matrix(i + 1), pauli_matrix(0));
        rho += s(i) * kron(pauli_matrix(0), pauli_matrix(i + 1));
        for (int j = 0; j < 3; ++j) rho += T(i, j) * kron(pauli_matrix(i + 1), pauli_matrix(j + 1));
    }
    return 0.25 * rho;
}

BlochDecomposition bloch_decompose(const TwoQubitState& state) {
    const Eigen::Matrix4cd& rho = state.matrix();
    auto ev = [&](int a, int b) { return (rho * kron(pauli_matrix(a), pauli_matrix(b))).trace().real(); };
    BlochDecomposition d;
    for (int i = 0; i < 3; ++i) {
        d.r(i) = ev(i + 1, 0);
        d.s(i) = ev(0, i + 1);
        for (int j = 0; j < 3; ++j) d.T(i, j) = ev(i + 1, j + 1);
    }
    return d;
}

}  // namespace clustercert
