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

// Brute-force dense-matrix reference built from explicit Kronecker products.
// Shares no code with the library's state-vector kernels.

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

Mat kron(const Mat& a, const Mat& b);
Mat identity(int n_qubits);

/// 2x2 matrix for 'I', 'X', 'Y', 'Z'.
Mat pauli(char letter);
/// Tensor product of letters, first letter the leftmost factor.
Mat pauli_string(const std::string& letters);

/// Single-qubit operator u on qubit q of n.
Mat on_qubit(const Mat& u, int q, int n);
/// Controlled-Z on qubits a, b built from projectors.
Mat cz(int a, int b, int n);
/// CNOT with the given control and target.
Mat cnot(int control, int target, int n);

/// |+>^n followed by CZ on every neighbouring pair.
Vec cluster(int n);

/// lambda |C><C| + (1-lambda)/n sum_i Z_i |C><C| Z_i.
Mat wc_density(int n, double lambda);

/// Applies the bra <v| to qubit q: returns the (2^(n-1) x 2^n) map.
Mat bra_on(const Vec& v, int q, int n);

/// Partial trace keeping qubits a < b.
Mat keep_pair(const Mat& rho, int a, int b, int n);

/// Concurrence from the non-Hermitian spectrum of rho (Y⊗Y) rho* (Y⊗Y).
double wootters(const Mat& rho4);

/// Random Haar-ish pure state vector of n qubits.
Vec random_state(int n, unsigned seed);

}  // namespace oracle
