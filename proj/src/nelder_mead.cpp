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

#include "clustercert/nelder_mead.hpp"

#include <algorithm>
#include <numeric>

#include "clustercert/errors.hpp"

namespace clustercert {

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& options) {
    const std::size_t dim = x0.size();
    if (dim == 0) throw DomainError("nelder_mead needs at least one parameter");
    if (!(options.f_tolerance > 0.0)) throw DomainError("f_tolerance must be positive");

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += options.initial_step;
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) values[i] = f(simplex[i]);

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    auto along = [&](double t, std::vector<double>& out) {
        // centroid + t (centroid - worst)
        for (std::size_t k = 0; k < dim; ++k) out[k] = centroid[k] + t * (centroid[k] - simplex[order[dim]][k]);
    };

    NelderMeadResult result;
    int it = 0;
    for (; it < options.max_iterations; ++it) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
        if (values[order[dim]] - values[order[0]] <= options.f_tolerance) {
            result.converged = true;
            break;
        }
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[order[i]][k] / double(dim);
        }
        const std::size_t worst = order[dim];
        const double f_best = values[order[0]];
        const double f_second = values[order[dim - 1]];

        along(1.0, trial);
        const double f_r = f(trial);
        if (f_r < f_best) {
            along(2.0, trial2);
            const double f_e = f(trial2);
            if (f_e < f_r) {
                simplex[worst] = trial2;
                values[worst] = f_e;
            } else {
                simplex[worst] = trial;
                values[worst] = f_r;
            }
            continue;
        }
        if (f_r < f_second) {
            simplex[worst] = trial;
            values[worst] = f_r;
            continue;
        }
        const bool outside = f_r < values[worst];
        along(outside ? 0.5 : -0.5, trial2);
        const double f_c = f(trial2);
        if (f_c < (outside ? f_r : values[worst])) {
            simplex[worst] = trial2;
            values[worst] = f_c;
            continue;
        }
        const auto& best = simplex[order[0]];
        for (std::size_t i = 1; i <= dim; ++i) {
            auto& v = simplex[order[i]];
            for (std::size_t k = 0; k < dim; ++k) v[k] = best[k] + 0.5 * (v[k] - best[k]);
            values[order[i]] = f(v);
        }
    }
    const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    result.iterations = it;
    return result;
}

}  // namespace clustercert
