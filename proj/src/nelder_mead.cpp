// Copyright 2026 The hpfold Authors
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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hpfold/solvers.hpp"

namespace hpfold {

namespace {

using Point = std::vector<double>;

Point affine(const Point& base, const Point& dir_from, const Point& dir_to, double t) {
  // base + t * (dir_to - dir_from)
  Point out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + t * (dir_to[i] - dir_from[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> start, const NelderMeadOptions& options,
                             const std::function<void(std::size_t, double, double)>& on_iteration) {
  if (start.empty()) throw std::invalid_argument("nelder_mead needs at least one parameter");
  const std::size_t dim = start.size();

  NelderMeadResult res;
  auto eval = [&](const Point& p) {
    ++res.evaluations;
    return f(p);
  };

  std::vector<Point> simplex;
  std::vector<double> values;
  auto build = [&](const Point& centre, double centre_value) {
    simplex.assign(1, centre);
    values.assign(1, centre_value);
    for (std::size_t i = 0; i < dim; ++i) {
      Point p = centre;
      p[i] += options.initial_step;
      values.push_back(eval(p));
      simplex.push_back(std::move(p));
    }
  };

  res.best = start;
  res.best_value = eval(start);
  build(start, res.best_value);

  std::vector<std::size_t> idx(dim + 1);
  std::size_t last_improvement = 0;
  while (res.iterations < options.max_iterations) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    {
      std::vector<Point> s2;
      std::vector<double> v2;
      for (std::size_t i : idx) {
        s2.push_back(std::move(simplex[i]));
        v2.push_back(values[i]);
      }
      simplex = std::move(s2);
      values = std::move(v2);
    }
    if (values.front() < res.best_value - options.tolerance * (1.0 + std::abs(res.best_value))) {
      res.best_value = values.front();
      res.best = simplex.front();
      last_improvement = res.iterations;
    }

    ++res.iterations;
    const double spread = values.back() - values.front();
    if (spread <= options.tolerance * (1.0 + std::abs(values.front())) ||
        res.iterations - last_improvement > options.stagnation_iterations) {
      ++res.restarts;
      last_improvement = res.iterations;
      build(res.best, res.best_value);
      if (on_iteration) on_iteration(res.iterations, res.best_value, res.best_value);
      continue;
    }

    Point centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v][i];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const Point& worst = simplex.back();
    const Point reflected = affine(centroid, worst, centroid, 1.0);
    const double fr = eval(reflected);
    bool shrink = false;
    if (fr < values.front()) {
      Point expanded = affine(centroid, worst, centroid, 2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex.back() = std::move(expanded);
        values.back() = fe;
      } else {
        simplex.back() = reflected;
        values.back() = fr;
      }
    } else if (fr < values[dim - 1]) {
      simplex.back() = reflected;
      values.back() = fr;
    } else if (fr < values.back()) {
      Point contracted = affine(centroid, centroid, reflected, 0.5);
      const double fc = eval(contracted);
      if (fc <= fr) {
        simplex.back() = std::move(contracted);
        values.back() = fc;
      } else {
        shrink = true;
      }
    } else {
      Point contracted = affine(centroid, centroid, worst, 0.5);
      const double fc = eval(contracted);
      if (fc < values.back()) {
        simplex.back() = std::move(contracted);
        values.back() = fc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t v = 1; v <= dim; ++v) {
        simplex[v] = affine(simplex[0], simplex[0], simplex[v], 0.5);
        values[v] = eval(simplex[v]);
      }
    }
    const double current = *std::min_element(values.begin(), values.end());
    if (on_iteration) on_iteration(res.iterations, current, std::min(current, res.best_value));
  }

  const auto it = std::min_element(values.begin(), values.end());
  if (*it < res.best_value) {
    res.best_value = *it;
    res.best = simplex[static_cast<std::size_t>(it - values.begin())];
  }
  return res;
}

}  // namespace hpfold
