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

#include "clustercert/bounds.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "clustercert/entanglement.hpp"
#include "clustercert/errors.hpp"

namespace clustercert {

namespace {

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
    return out;
}

}  // namespace

double le_floor_pair_raw(double z, int k) {
    if (k < 1) throw DomainError("le_floor_pair needs k >= 1");
    return 1.0 - double(k + 1) * (1.0 - z);
}

double le_floor_pair(double z, int k) { return std::max(0.0, le_floor_pair_raw(z, k)); }

double le_floor_segment_raw(double z, int n) {
    if (n < 2) throw DomainError("le_floor_segment needs n >= 2");
    return le_floor_pair_raw(z, n - 1);
}

double le_floor_segment(double z, int n) { return std::max(0.0, le_floor_segment_raw(z, n)); }

Rational threshold_z_exact(int measured_qubits) {
    if (measured_qubits < 1) throw DomainError("threshold_z needs at least one measured qubit");
    const std::int64_t k = measured_qubits + 1;
    return {k, k + 1};
}

double threshold_z(int measured_qubits) { return threshold_z_exact(measured_qubits).value(); }

double direct_bound(double b1, double b2, double b3) {
    const auto& X = pauli_matrix(1);
    const auto& Y = pauli_matrix(2);
    const auto& Z = pauli_matrix(3);
    const Eigen::Matrix4cd rho =
        0.25 * (Eigen::Matrix4cd::Identity() + b1 * kron(Z, Y) + b2 * kron(Y, Z) + b3 * kron(X, X));
    if (!is_valid_two_qubit_state(rho, 1e-9)) {
        throw InconsistentCorrelatorsError("correlators (" + std::to_string(b1) + ", " + std::to_string(b2) +
                                           ", " + std::to_string(b3) + ") admit no physical state");
    }
    return concurrence(TwoQubitState(rho));
}

double fidelity_floor_general(std::span<const double> generator_expectations) {
    double deficit = 0.0;
    for (double k : generator_expectations) deficit += 1.0 - k;
    return 1.0 - 0.5 * deficit;
}

double fidelity_floor_uniform(double z, int n) {
    const std::vector<double> values(static_cast<std::size_t>(n), z);
    return fidelity_floor_general(values);
}

double fef_floor_from_triplet(double triplet_sum) { return (1.0 + triplet_sum) / 4.0; }

double teleport_floor_raw(double z, int n) { return 1.0 - (double(n) / 3.0) * (1.0 - z); }

double teleport_floor(double z, int n) { return std::max(0.5, teleport_floor_raw(z, n)); }

double wc_lambda(double z, int n) {
    if (n < 2) throw DomainError("wc_lambda needs n >= 2");
    const double lambda = 1.0 - double(n) * (1.0 - z) / 2.0;
    if (lambda < 0.0 || lambda > 1.0) {
        throw NoWcStateError("no worst-case state for z=" + std::to_string(z) + ", n=" + std::to_string(n) +
                             " (lambda would be " + std::to_string(lambda) + ")");
    }
    return lambda;
}

double wc_z(double lambda, int n) {
    if (n < 2) throw DomainError("wc_z needs n >= 2");
    if (lambda < 0.0 || lambda > 1.0) throw DomainError("lambda must lie in [0, 1]");
    return 1.0 - 2.0 * (1.0 - lambda) / double(n);
}

BoundReport make_bound_report(double z, int span, SpanKind kind) {
    BoundReport r;
    r.z = z;
    r.span = span;
    r.span_kind = kind;
    const int n = r.segment_size();
    if (n < 3) throw DomainError("bound reports need a segment of at least 3 qubits");

    r.le_floor_raw = le_floor_segment_raw(z, n);
    r.le_floor = std::max(0.0, r.le_floor_raw);
    r.fidelity_floor_raw = fidelity_floor_uniform(z, n);
    r.fidelity_floor = std::max(0.0, r.fidelity_floor_raw);
    // Worst-case triplet sum for a segment of n qubits: 2n(z-1)+3.
    r.fef_floor_raw = fef_floor_from_triplet(2.0 * double(n) * (z - 1.0) + 3.0);
    r.fef_floor = std::clamp(r.fef_floor_raw, 0.0, 1.0);
    r.teleport_floor_raw = teleport_floor_raw(z, n);
    r.teleport_floor = teleport_fidelity(std::max(r.fef_floor, 0.25));
    return r;
}

}  // namespace clustercert
