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

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "clustercert/bounds.hpp"
#include "clustercert/densesim.hpp"
#include "clustercert/errormodel.hpp"
#include "clustercert/pauli.hpp"

namespace clustercert {

/// Per-photon detection result. `Unmeasured` marks an 'I' setting.
enum class Outcome : std::int8_t { Minus = -1, Lost = 0, Plus = 1, Unmeasured = 2 };

char outcome_char(Outcome o);
Outcome outcome_from_char(char c);

/// One window of consecutive photons measured in the given local bases.
struct ClickRecord {
    std::uint64_t trial_id = 0;
    std::size_t window_start = 0;
    std::string settings;  // letters X, Y, Z, I; one per photon
    std::vector<Outcome> outcomes;

    /// Every measured photon was detected.
    bool complete() const noexcept;
    /// Product of the +-1 outcomes over measured photons; requires complete().
    int product() const;
    std::string outcome_string() const;

    bool operator==(const ClickRecord&) const = default;
};

struct ExperimentPlan {
    std::vector<std::string> basis_cycle{"ZXZ"};
    double efficiency = 1.0;
    std::uint64_t windows = 1;
    std::uint64_t seed = 0;
};

void validate(const ExperimentPlan& plan);

/// Samples windows from the Born distribution of `rho`.
///
/// Trial t uses setting basis_cycle[t mod C] at window start
/// (t / C) mod (n - w + 1), w being the setting length. Every photon is
/// detected independently with probability `efficiency`. Records are drawn
/// in fixed chunks, each with its own seeded stream, so the output does not
/// depend on the thread count.
std::vector<ClickRecord> simulate_clicks(const Ensemble& rho, const ExperimentPlan& plan);

/// Same for the source model; windows cover photons only, never the spin.
/// The output state is simulated densely, so n_photons must fit the limit.
std::vector<ClickRecord> simulate_clicks(const SourceParams& source, const ExperimentPlan& plan);

enum class IntervalMethod { Hoeffding, Normal };

const char* method_name(IntervalMethod m);

struct CorrelatorEstimate {
    double mean = 0.0;
    std::uint64_t n_complete = 0;
    std::uint64_t n_total = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double confidence = 0.99;
    IntervalMethod method = IntervalMethod::Hoeffding;
    /// Hoeffding epsilon for the probability of a +1 product; the interval on
    /// the +-1 mean has half-width 2 epsilon.
    double epsilon = 0.0;
    /// Advisory normal-approximation interval.
    double normal_low = 0.0;
    double normal_high = 0.0;
};

/// Mean outcome product over complete records. Records must share one
/// setting. Throws InsufficientDataError when nothing is complete.
CorrelatorEstimate estimate_correlator(std::span<const ClickRecord> records, double delta = 0.01);

/// Estimate of <op> from records whose settings spell op's letters; the
/// operator sign is applied to the mean and interval.
CorrelatorEstimate estimate_stabilizer(std::span<const ClickRecord> records, const PauliString& op,
                                       double delta = 0.01);

/// simulate_clicks followed by estimate_correlator, folded chunk by chunk so
/// that no record list is held in memory. The plan must have one setting.
CorrelatorEstimate simulate_estimate(const Ensemble& rho, const ExperimentPlan& plan, double delta = 0.01);
CorrelatorEstimate simulate_estimate(const SourceParams& source, const ExperimentPlan& plan, double delta = 0.01);

/// sign(mean) * max(0, |mean| - half-width of the Hoeffding interval).
double shrink_toward_zero(const CorrelatorEstimate& est);

struct CertifiedReport {
    BoundReport report;
    IntervalMethod method = IntervalMethod::Hoeffding;
    double confidence = 0.99;
};

/// Every floor evaluated at z = ci_low.
std::vector<CertifiedReport> certified_report(const CorrelatorEstimate& est, std::span<const int> spans,
                                              SpanKind kind = SpanKind::MeasuredQubits);

struct SamplePlan {
    std::uint64_t complete_triples = 0;
    std::uint64_t windows = 0;
};

/// complete = ceil(ln(2/delta) / (2 eps^2)); windows = ceil(complete / eta^3).
/// eta may equal 1.
SamplePlan plan_samples(double eta, double epsilon, double delta);

/// Direct bound from three estimated triplet correlators, each shrunk toward
/// zero before building rho_B. Each correlator gets delta/3.
struct DirectBoundEstimate {
    std::vector<CorrelatorEstimate> correlators;
    std::vector<double> shrunk;
    double bound = 0.0;
};

DirectBoundEstimate estimate_direct_bound(std::span<const ClickRecord> records, std::span<const PauliString> triplet,
                                          double delta = 0.01);

/// Record I/O. Both formats carry the schema tag clustercert.clicks/1.
void write_clicks_jsonl(std::ostream& out, std::span<const ClickRecord> records);
void write_clicks_csv(std::ostream& out, std::span<const ClickRecord> records);
std::vector<ClickRecord> read_clicks_jsonl(std::istream& in);
std::vector<ClickRecord> read_clicks_csv(std::istream& in);

}  // namespace clustercert
