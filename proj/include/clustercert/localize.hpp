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
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clustercert/densesim.hpp"
#include "clustercert/nelder_mead.hpp"

namespace clustercert {

/// Measurement angles for qubits 1..n-2. Qubit i is projected onto
/// sin(theta_i/2)|0> + e^{i phi_i} cos(theta_i/2)|1> for outcome 0.
struct AngleVector {
    std::vector<double> theta;
    std::vector<double> phi;

    std::size_t size() const noexcept { return theta.size(); }
    /// Maps every pair into theta in [0, pi], phi in [0, 2 pi) without changing the projector.
    AngleVector wrapped() const;
    /// Root-mean-square of theta_i - pi/2 after wrapping.
    double theta_rms_deviation() const;
};

struct OptimizerConfig {
    int restarts = 20;
    int max_iterations = 2000;
    double simplex_init_step = 0.3;
    double f_tolerance = 1e-9;
    std::uint64_t seed = 0;
};

void validate(const OptimizerConfig& cfg);

enum class LocalizeMode { Postselected, OutcomeAveraged };

const char* mode_name(LocalizeMode m);
LocalizeMode parse_mode(const std::string& text);

/// Projects qubits 1..n-2 and returns the normalized state of qubits 0 and n-1
/// with the probability of the outcome string. Throws ImpossibleOutcomeError
/// for zero-probability outcomes.
std::pair<double, TwoQubitState> localized_state(const Ensemble& rho, const AngleVector& angles,
                                                 std::span<const int> outcomes);

/// Sum over all outcome strings of p_s C(rho_s).
double outcome_averaged_concurrence(const Ensemble& rho, const AngleVector& angles);

struct LocalizeResult {
    AngleVector best_angles;  // wrapped
    double best_value = 0.0;
    int iterations = 0;       // of the winning restart
    bool converged = false;
    int best_restart = 0;
};

/// Seeded multi-start Nelder-Mead over all measurement angles. Postselected
/// mode maximizes the concurrence of the all-zero outcome; outcome-averaged
/// mode maximizes outcome_averaged_concurrence.
LocalizeResult maximize_le(const Ensemble& rho, const OptimizerConfig& cfg, LocalizeMode mode);

/// Concurrence after equatorial measurements |phi_i, s_i> on qubits 1..n-2 of wc_state(n, lambda).
double equatorial_check(double lambda, std::size_t n, std::span<const double> phi, std::span<const int> outcomes);

struct Wc4Row {
    double lambda = 0.0;
    double theta2 = 0.0;
    double theta3 = 0.0;
    double simulated = 0.0;
    double closed_form = 0.0;
};

struct Wc4Table {
    std::vector<Wc4Row> rows;
    double max_deviation = 0.0;
};

/// Dense concurrence after X-Z plane projections (outcome 0) on the middle
/// qubits of wc_state(4, lambda), beside x_state_concurrence_wc4.
Wc4Table wc4_grid_compare(std::span<const double> lambda_grid, std::span<const double> theta2_grid,
                          std::span<const double> theta3_grid);

struct SweepRow {
    double lambda = 0.0;
    std::size_t n = 0;
    LocalizeMode mode = LocalizeMode::Postselected;
    LocalizeResult result;
};

std::vector<SweepRow> localize_sweep(std::size_t n, std::span<const double> lambdas, LocalizeMode mode,
                                     const OptimizerConfig& cfg);

/// Header: lambda,n,mode,best_value,theta_rms_deviation_from_pi_over_2,iterations,converged
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace clustercert
