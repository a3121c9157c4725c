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

#include "dense_oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace oracle {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return out;
}

Mat identity(int n_qubits) { return Mat::Identity(1 << n_qubits, 1 << n_qubits); }

Mat pauli(char letter) {
    Mat m(2, 2);
    switch (letter) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("bad Pauli letter");
    }
    return m;
}

Mat pauli_string(const std::string& letters) {
    Mat out = Mat::Identity(1, 1);
    for (char c : letters) out = kron(out, pauli(c));
    return out;
}

Mat on_qubit(const Mat& u, int q, int n) { return kron(kron(identity(q), u), identity(n - q - 1)); }

Mat cz(int a, int b, int n) {
    Mat p1(2, 2);
    p1 << 0, 0, 0, 1;
    // 1 - 2 |11><11|
    return identity(n) - 2.0 * on_qubit(p1, a, n) * on_qubit(p1, b, n);
}

Mat cnot(int control, int target, int n) {
    Mat p0(2, 2), p1(2, 2);
    p0 << 1, 0, 0, 0;
    p1 << 0, 0, 0, 1;
    return on_qubit(p0, control, n) + on_qubit(p1, control, n) * on_qubit(pauli('X'), target, n);
}

Vec cluster(int n) {
    Vec plus(2);
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    Mat v = Mat::Identity(1, 1);
    for (int i = 0; i < n; ++i) v = kron(v, plus);
    Vec psi = v;
    for (int i = 0; i + 1 < n; ++i) psi = cz(i, i + 1, n) * psi;
    return psi;
}

Mat wc_density(int n, double lambda) {
    const Vec c = cluster(n);
    Mat rho = lambda * c * c.adjoint();
    for (int i = 0; i < n; ++i) {
        const Vec zc = on_qubit(pauli('Z'), i, n) * c;
        rho += (1 - lambda) / n * zc * zc.adjoint();
    }
    return rho;
}

Mat bra_on(const Vec& v, int q, int n) {
    Mat bra = v.adjoint();
    return kron(kron(identity(q), bra), identity(n - q - 1));
}

Mat keep_pair(const Mat& rho, int a, int b, int n) {
    Mat out = Mat::Zero(4, 4);
    const int dim = 1 << n;
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            // Rest bits must agree.
            const int mask = ~((1 << (n - 1 - a)) | (1 << (n - 1 - b)));
            if ((r & mask) != (c & mask)) continue;
            const int ri = 2 * ((r >> (n - 1 - a)) & 1) + ((r >> (n - 1 - b)) & 1);
            const int ci = 2 * ((c >> (n - 1 - a)) & 1) + ((c >> (n - 1 - b)) & 1);
            out(ri, ci) += rho(r, c);
        }
    }
    return out;
}

double wootters(const Mat& rho4) {
    const Mat yy = kron(pauli('Y'), pauli('Y'));
    const Mat r = rho4 * yy * rho4.conjugate() * yy;
    Eigen::ComplexEigenSolver<Mat> es(r);
    std::vector<double> l;
    for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

Vec random_state(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    Vec v(1 << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(g(rng), g(rng));
    return v / v.norm();
}

}  // namespace oracle
