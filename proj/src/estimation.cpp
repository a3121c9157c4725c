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

#include "clustercert/estimation.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <json.hpp>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "clustercert/errors.hpp"
#include "clustercert/kernels.hpp"

namespace clustercert {

namespace {

constexpr std::uint64_t kChunk = 4096;
constexpr const char* kClickSchema = "clustercert.clicks/1";

const kernels::Gate2x2 kToX{std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2,
                            -std::numbers::sqrt2 / 2};
// H S^dagger maps the +1 eigenstate of Y to |0>.
const kernels::Gate2x2 kToY{std::numbers::sqrt2 / 2, cplx(0, -std::numbers::sqrt2 / 2), std::numbers::sqrt2 / 2,
                            cplx(0, std::numbers::sqrt2 / 2)};

void check_setting(const std::string& s) {
    if (s.empty()) throw DomainError("empty measurement setting");
    for (char c : s) {
        if (c != 'X' && c != 'Y' && c != 'Z' && c != 'I') throw DomainError("setting letters must be X, Y, Z or I");
    }
    if (std::all_of(s.begin(), s.end(), [](char c) { return c == 'I'; })) {
        throw DomainError("setting measures no photon");
    }
}

// Cumulative outcome distribution of the measured letters of `setting` placed at `start`.
std::vector<double> window_cdf(const Ensemble& rho, std::size_t start, const std::string& setting) {
    const auto n = static_cast<unsigned>(rho.n_qubits());
    std::vector<unsigned> measured;
    for (std::size_t i = 0; i < setting.size(); ++i) {
        if (setting[i] != 'I') measured.push_back(static_cast<unsigned>(start + i));
    }
    std::vector<double> probs(std::size_t{1} << measured.size(), 0.0);
    std::vector<double> part(probs.size());
    for (const auto& br : rho.branches()) {
        std::vector<cplx> amps(br.state.amplitudes().begin(), br.state.amplitudes().end());
        for (std::size_t i = 0; i < setting.size(); ++i) {
            const auto q = static_cast<unsigned>(start + i);
            if (setting[i] == 'X') kernels::apply_1q(amps, n, q, kToX);
            if (setting[i] == 'Y') kernels::apply_1q(amps, n, q, kToY);
        }
        kernels::marginal_probabilities(amps, n, measured, part);
        for (std::size_t k = 0; k < probs.size(); ++k) probs[k] += br.weight * part[k];
    }
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) cdf[k] = acc += probs[k];
    for (auto& c : cdf) c /= acc;
    cdf.back() = 1.0;
    return cdf;
}

struct Tally {
    std::int64_t sum = 0;
    std::uint64_t complete = 0;
    std::uint64_t total = 0;
};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

// Precomputed window distributions shared by every chunk.
struct Sampler {
    const ExperimentPlan& plan;
    std::vector<std::size_t> slots;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<double>> cdfs;

    Sampler(const Ensemble& rho, const ExperimentPlan& p, std::size_t positions_end) : plan(p) {
        validate(plan);
        slots.resize(plan.basis_cycle.size());
        for (std::size_t c = 0; c < slots.size(); ++c) {
            const auto& s = plan.basis_cycle[c];
            if (s.size() > positions_end) throw DomainError("setting " + s + " does not fit the chain");
            slots[c] = positions_end - s.size() + 1;
            for (std::size_t start = 0; start < slots[c]; ++start) cdfs[{c, start}] = window_cdf(rho, start, s);
        }
    }

    std::uint64_t chunks() const { return (plan.windows + kChunk - 1) / kChunk; }

    // Records of one chunk, drawn from that chunk's own stream.
    void generate(std::uint64_t chunk, std::vector<ClickRecord>& out) const {
        std::seed_seq seq{std::uint32_t(plan.seed), std::uint32_t(plan.seed >> 32), std::uint32_t(chunk),
                          std::uint32_t(chunk >> 32)};
        std::mt19937_64 rng(seq);
        const std::size_t cycle = plan.basis_cycle.size();
        const std::uint64_t end = std::min(plan.windows, (chunk + 1) * kChunk);
        out.resize(end - chunk * kChunk);
        for (std::uint64_t t = chunk * kChunk; t < end; ++t) {
            const std::size_t c = t % cycle;
            const std::size_t start = (t / cycle) % slots[c];
            const auto& setting = plan.basis_cycle[c];
            const auto& cdf = cdfs.at({c, start});
            const auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), uniform01(rng)) -
                                                    cdf.begin());
            const std::size_t outcome = std::min(k, cdf.size() - 1);

            ClickRecord& r = out[t - chunk * kChunk];
            r.trial_id = t;
            r.window_start = start;
            r.settings = setting;
            r.outcomes.resize(setting.size());
            std::size_t bit = 0;
            for (char l : setting) bit += l != 'I';
            for (std::size_t i = 0; i < setting.size(); ++i) {
                if (setting[i] == 'I') {
                    r.outcomes[i] = Outcome::Unmeasured;
                    continue;
                }
                --bit;
                const bool detected = uniform01(rng) < plan.efficiency;
                r.outcomes[i] = !detected ? Outcome::Lost : (((outcome >> bit) & 1u) ? Outcome::Minus : Outcome::Plus);
            }
        }
    }

    std::vector<ClickRecord> all() const {
        std::vector<ClickRecord> records(plan.windows);
        const auto n = static_cast<std::int64_t>(chunks());
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t ci = 0; ci < n; ++ci) {
            std::vector<ClickRecord> part;
            generate(static_cast<std::uint64_t>(ci), part);
            std::move(part.begin(), part.end(), records.begin() + ci * std::int64_t(kChunk));
        }
        return records;
    }

    // Outcome-product tallies per chunk, summed in chunk order.
    Tally tally() const {
        const auto n = static_cast<std::int64_t>(chunks());
        std::vector<Tally> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t ci = 0; ci < n; ++ci) {
            std::vector<ClickRecord> part;
            generate(static_cast<std::uint64_t>(ci), part);
            Tally& t = parts[static_cast<std::size_t>(ci)];
            for (const auto& r : part) {
                ++t.total;
                if (!r.complete()) continue;
                ++t.complete;
                t.sum += r.product();
            }
        }
        Tally total;
        for (const auto& t : parts) {
            total.sum += t.sum;
            total.complete += t.complete;
            total.total += t.total;
        }
        return total;
    }
};

CorrelatorEstimate finish_estimate(double sum, std::uint64_t complete, std::uint64_t total, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
    if (complete == 0) throw InsufficientDataError("no complete coincidences among " + std::to_string(total) + " records");
    CorrelatorEstimate e;
    e.n_complete = complete;
    e.n_total = total;
    e.mean = sum / double(complete);
    e.confidence = 1.0 - delta;
    e.method = IntervalMethod::Hoeffding;
    e.epsilon = std::sqrt(std::log(2.0 / delta) / (2.0 * double(complete)));
    e.ci_low = std::max(-1.0, e.mean - 2.0 * e.epsilon);
    e.ci_high = std::min(1.0, e.mean + 2.0 * e.epsilon);
    const double zq = boost::math::quantile(boost::math::normal(), 1.0 - delta / 2.0);
    const double half = zq * std::sqrt(std::max(0.0, 1.0 - e.mean * e.mean) / double(complete));
    e.normal_low = std::max(-1.0, e.mean - half);
    e.normal_high = std::min(1.0, e.mean + half);
    return e;
}

ClickRecord record_from_fields(std::uint64_t trial, std::size_t window, std::string settings,
                               const std::string& outcomes) {
    if (settings.size() != outcomes.size()) throw DomainError("settings and outcomes differ in length");
    check_setting(settings);
    ClickRecord r{trial, window, std::move(settings), {}};
    for (char c : outcomes) r.outcomes.push_back(outcome_from_char(c));
    for (std::size_t i = 0; i < r.settings.size(); ++i) {
        if ((r.settings[i] == 'I') != (r.outcomes[i] == Outcome::Unmeasured)) {
            throw DomainError("outcome '.' must pair with setting I");
        }
    }
    return r;
}

}  // namespace

char outcome_char(Outcome o) {
    switch (o) {
        case Outcome::Plus: return '+';
        case Outcome::Minus: return '-';
        case Outcome::Lost: return 'L';
        case Outcome::Unmeasured: return '.';
    }
    return '?';
}

Outcome outcome_from_char(char c) {
    switch (c) {
        case '+': return Outcome::Plus;
        case '-': return Outcome::Minus;
        case 'L': return Outcome::Lost;
        case '.': return Outcome::Unmeasured;
        default: throw DomainError(std::string("unknown outcome character '") + c + "'");
    }
}

bool ClickRecord::complete() const noexcept {
    return std::none_of(outcomes.begin(), outcomes.end(), [](Outcome o) { return o == Outcome::Lost; });
}

int ClickRecord::product() const {
    int p = 1;
    for (auto o : outcomes) {
        if (o == Outcome::Lost) throw DomainError("product of an incomplete record");
        if (o == Outcome::Minus) p = -p;
    }
    return p;
}

std::string ClickRecord::outcome_string() const {
    std::string s;
    for (auto o : outcomes) s += outcome_char(o);
    return s;
}

void validate(const ExperimentPlan& plan) {
    if (plan.basis_cycle.empty()) throw DomainError("basis cycle is empty");
    for (const auto& s : plan.basis_cycle) check_setting(s);
    if (!(plan.efficiency > 0.0 && plan.efficiency <= 1.0)) throw DomainError("efficiency must lie in (0, 1]");
    if (plan.windows < 1) throw DomainError("need at least one window");
}

std::vector<ClickRecord> simulate_clicks(const Ensemble& rho, const ExperimentPlan& plan) {
    return Sampler(rho, plan, rho.n_qubits()).all();
}

std::vector<ClickRecord> simulate_clicks(const SourceParams& source, const ExperimentPlan& plan) {
    validate(source);
    return Sampler(emit_state(source), plan, source.n_photons).all();
}

CorrelatorEstimate simulate_estimate(const Ensemble& rho, const ExperimentPlan& plan, double delta) {
    if (plan.basis_cycle.size() != 1) throw DomainError("streamed estimation needs a single setting");
    const Tally t = Sampler(rho, plan, rho.n_qubits()).tally();
    return finish_estimate(double(t.sum), t.complete, t.total, delta);
}

CorrelatorEstimate simulate_estimate(const SourceParams& source, const ExperimentPlan& plan, double delta) {
    validate(source);
    if (plan.basis_cycle.size() != 1) throw DomainError("streamed estimation needs a single setting");
    const Tally t = Sampler(emit_state(source), plan, source.n_photons).tally();
    return finish_estimate(double(t.sum), t.complete, t.total, delta);
}

const char* method_name(IntervalMethod m) { return m == IntervalMethod::Hoeffding ? "hoeffding" : "normal"; }

CorrelatorEstimate estimate_correlator(std::span<const ClickRecord> records, double delta) {
    double sum = 0.0;
    std::uint64_t complete = 0;
    for (const auto& r : records) {
        if (r.settings != records.front().settings) throw DomainError("records mix measurement settings");
        if (!r.complete()) continue;
        sum += r.product();
        ++complete;
    }
    return finish_estimate(sum, complete, records.size(), delta);
}

CorrelatorEstimate estimate_stabilizer(std::span<const ClickRecord> records, const PauliString& op, double delta) {
    if (!op.is_hermitian()) throw DomainError("operator must be Hermitian");
    std::string letters;
    for (std::size_t q = 0; q < op.n_qubits(); ++q) letters += op.letter(q);
    double sum = 0.0;
    std::uint64_t complete = 0;
    std::uint64_t total = 0;
    for (const auto& r : records) {
        if (r.settings != letters) continue;
        ++total;
        if (!r.complete()) continue;
        sum += r.product();
        ++complete;
    }
    auto e = finish_estimate(sum, complete, total, delta);
    if (op.sign() < 0) {
        e.mean = -e.mean;
        e.ci_low = -std::exchange(e.ci_high, -e.ci_low);
        e.normal_low = -std::exchange(e.normal_high, -e.normal_low);
    }
    return e;
}

double shrink_toward_zero(const CorrelatorEstimate& est) {
    const double m = std::max(0.0, std::abs(est.mean) - 2.0 * est.epsilon);
    return est.mean < 0 ? -m : m;
}

std::vector<CertifiedReport> certified_report(const CorrelatorEstimate& est, std::span<const int> spans,
                                              SpanKind kind) {
    std::vector<CertifiedReport> out;
    for (int span : spans) out.push_back({make_bound_report(est.ci_low, span, kind), est.method, est.confidence});
    return out;
}

SamplePlan plan_samples(double eta, double epsilon, double delta) {
    if (!(eta > 0.0 && eta <= 1.0)) throw DomainError("eta must lie in (0, 1]");
    if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0)) {
        throw DomainError("epsilon and delta must lie in (0, 1)");
    }
    SamplePlan p;
    p.complete_triples = static_cast<std::uint64_t>(std::ceil(std::log(2.0 / delta) / (2.0 * epsilon * epsilon)));
    const double w = double(p.complete_triples) / (eta * eta * eta);
    // Absorb the round-off in eta^3 so exact quotients are not bumped up by one.
    const double r = std::round(w);
    p.windows = static_cast<std::uint64_t>(std::abs(w - r) <= 1e-9 * w ? r : std::ceil(w));
    return p;
}

DirectBoundEstimate estimate_direct_bound(std::span<const ClickRecord> records, std::span<const PauliString> triplet,
                                          double delta) {
    if (triplet.size() != 3) throw DomainError("direct bound needs three correlators");
    DirectBoundEstimate d;
    for (const auto& op : triplet) {
        d.correlators.push_back(estimate_stabilizer(records, op, delta / 3.0));
        d.shrunk.push_back(shrink_toward_zero(d.correlators.back()));
    }
    d.bound = direct_bound(d.shrunk[0], d.shrunk[1], d.shrunk[2]);
    return d;
}

void write_clicks_jsonl(std::ostream& out, std::span<const ClickRecord> records) {
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["schema"] = kClickSchema;
        j["trial"] = r.trial_id;
        j["window"] = r.window_start;
        j["settings"] = r.settings;
        j["outcomes"] = r.outcome_string();
        out << j.dump() << '\n';
    }
}

void write_clicks_csv(std::ostream& out, std::span<const ClickRecord> records) {
    out << "# schema: " << kClickSchema << '\n' << "trial,window,settings,outcomes\n";
    for (const auto& r : records) {
        out << r.trial_id << ',' << r.window_start << ',' << r.settings << ',' << r.outcome_string() << '\n';
    }
}

std::vector<ClickRecord> read_clicks_jsonl(std::istream& in) {
    std::vector<ClickRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        if (j.at("schema").get<std::string>() != kClickSchema) throw DomainError("unsupported click schema");
        out.push_back(record_from_fields(j.at("trial").get<std::uint64_t>(), j.at("window").get<std::size_t>(),
                                         j.at("settings").get<std::string>(), j.at("outcomes").get<std::string>()));
    }
    return out;
}

std::vector<ClickRecord> read_clicks_csv(std::istream& in) {
    std::vector<ClickRecord> out;
    std::string line;
    bool schema_ok = false;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            schema_ok = schema_ok || line == std::string("# schema: ") + kClickSchema;
            continue;
        }
        if (!header) {
            if (line != "trial,window,settings,outcomes") throw DomainError("unexpected click CSV header");
            header = true;
            continue;
        }
        std::istringstream fields(line);
        std::string trial, window, settings, outcomes;
        std::getline(fields, trial, ',');
        std::getline(fields, window, ',');
        std::getline(fields, settings, ',');
        std::getline(fields, outcomes, ',');
        out.push_back(record_from_fields(std::stoull(trial), std::stoull(window), settings, outcomes));
    }
    if (!schema_ok) throw DomainError("click CSV lacks the schema line");
    return out;
}

}  // namespace clustercert
