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

#include <cstdint>
#include <span>
#include <string>

namespace clustercert {

/// Exact non-negative rational num/den.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const noexcept { return double(num) / double(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
    bool operator==(const Rational&) const = default;
};

/// Localizable-entanglement floor between qubits j and j+k given every
/// three-qubit generator expectation is at least z: max{0, 1-(k+1)(1-z)}.
double le_floor_pair(double z, int k);
double le_floor_pair_raw(double z, int k);

/// Floor across a clipped n-qubit segment: le_floor_pair(z, n-1).
double le_floor_segment(double z, int n);
double le_floor_segment_raw(double z, int n);

/// Smallest z with a positive pair floor across `measured_qubits` = k-1
/// measured qubits: k/(k+1).
Rational threshold_z_exact(int measured_qubits);
double threshold_z(int measured_qubits);

/// Concurrence of rho_B = 1/4 (1 + b1 Z⊗Y + b2 Y⊗Z + b3 X⊗X).
/// Throws InconsistentCorrelatorsError when rho_B has an eigenvalue below -1e-9.
double direct_bound(double b1, double b2, double b3);

/// 1 - (1/2) sum_i (1 - <K_i>).
double fidelity_floor_general(std::span<const double> generator_expectations);

/// Fidelity floor for n generators all at z: 1 - n(1-z)/2.
double fidelity_floor_uniform(double z, int n);

/// (1 + T)/4.
double fef_floor_from_triplet(double triplet_sum);

/// 1 - (n/3)(1 - z); `teleport_floor` clamps below at 1/2, the separable baseline.
double teleport_floor_raw(double z, int n);
double teleport_floor(double z, int n);

/// lambda = 1 - n(1-z)/2. Throws NoWcStateError when z < 1 - 2/n.
double wc_lambda(double z, int n);
/// Inverse of wc_lambda: z = 1 - 2(1-lambda)/n.
double wc_z(double lambda, int n);

enum class SpanKind { MeasuredQubits, SegmentSize };

/// All floors implied by a generator expectation z over a span. Clamped values
/// are reported with their raw counterparts.
struct BoundReport {
    double z = 0.0;
    int span = 0;
    SpanKind span_kind = SpanKind::MeasuredQubits;

    double le_floor = 0.0;
    double fidelity_floor = 0.0;
    double fef_floor = 0.0;
    double teleport_floor = 0.0;

    double le_floor_raw = 0.0;
    double fidelity_floor_raw = 0.0;
    double fef_floor_raw = 0.0;
    double teleport_floor_raw = 0.0;

    /// Segment size n the span corresponds to.
    int segment_size() const noexcept { return span_kind == SpanKind::SegmentSize ? span : span + 2; }
};

BoundReport make_bound_report(double z, int span, SpanKind kind);

}  // namespace clustercert
