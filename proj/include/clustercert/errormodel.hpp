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

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "clustercert/densesim.hpp"
#include "clustercert/pauli.hpp"

namespace clustercert {

/// Machine-gun source: an emitter spin that emits one photon per cycle.
///
/// Each cycle applies, in order: a Y error on the spin with probability p_y,
/// the emission isometry |0>|0_ph>, |1>|1_ph> (a CNOT from spin to the new
/// photon), and a Hadamard on the spin. The spin starts in |+>. The emitted
/// register is (photon_0, ..., photon_{n-1}, spin); at p_y = 0 it is exactly
/// the (n+1)-qubit linear cluster state, so no local correction is needed.
struct SourceParams {
    std::size_t n_photons = 1;
    double p_y = 0.0;
    std::size_t dense_limit = 10;

    std::size_t chain_length() const noexcept { return n_photons + 1; }
};

void validate(const SourceParams& params);

/// Exact output mixture over all 2^n error patterns.
/// Throws ResourceError when n_photons exceeds params.dense_limit.
Ensemble emit_state(const SourceParams& params);

/// Expectation of a stabilizer-group element (up to sign) of the ideal
/// output chain, by propagating it backwards through the emission circuit:
/// every error site where it anticommutes with Y on the spin contributes a
/// factor (1 - 2 p_y). Throws DomainError for non-stabilizer operators.
double correlator_analytic(const PauliString& op, const SourceParams& params);

/// Interior photon generator expectation <Z X Z> of the source.
double source_zxz(double p_y);

/// Correlators of the surviving triplet for a Y-measurement chain across
/// `measured` photons, sampled from an interior window of the source.
std::array<double, 3> source_y_chain_triplet(double p_y, int measured, std::size_t window_offset = 1);

/// Direct bound across `measured` photons for the Y-measurement chain.
double source_direct_bound(double p_y, int measured);

struct RangeRow {
    double p = 0.0;
    double zxz_value = 0.0;
    int zxz_range = 0;     // measured qubits with a positive <ZXZ> floor
    int direct_range = 0;  // measured qubits with a positive direct bound
    double le3_direct = 0.0;
    double le3_zxz = 0.0;
};

RangeRow compare_range(double p, int max_span);
std::vector<RangeRow> compare_ranges(std::span<const double> p_grid, int max_span);

struct Le3Values {
    double direct = 0.0;
    double zxz = 0.0;
};

/// Both floors across a five-qubit segment (three measured photons).
Le3Values le3_values(double p);

/// Error probabilities at which each three-measured-photon floor reaches zero.
struct Le3Crossings {
    double direct = 0.0;
    double zxz = 0.0;
};

Le3Crossings le3_crossings(double tolerance = 1e-13);

}  // namespace clustercert
