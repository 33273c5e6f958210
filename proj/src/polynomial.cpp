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

#include "hpfold/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

namespace hpfold {

BinaryPolynomial BinaryPolynomial::constant(double c) {
  BinaryPolynomial p;
  p.accumulate({}, c);
  return p;
}

BinaryPolynomial BinaryPolynomial::variable(std::uint32_t index, double coefficient) {
  BinaryPolynomial p;
  p.accumulate({index}, coefficient);
  return p;
}

void BinaryPolynomial::add_term(Monomial vars, double c) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  accumulate(vars, c);
}

void BinaryPolynomial::accumulate(const Monomial& m, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

double BinaryPolynomial::constant_term() const { return coefficient({}); }

double BinaryPolynomial::coefficient(Monomial vars) const {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  auto it = terms_.find(vars);
  return it == terms_.end() ? 0.0 : it->second;
}

std::size_t BinaryPolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

std::size_t BinaryPolynomial::variable_span() const {
  std::size_t span = 0;
  for (const auto& [m, c] : terms_) {
    if (!m.empty()) span = std::max<std::size_t>(span, m.back() + 1);
  }
  return span;
}

double BinaryPolynomial::evaluate(std::span<const std::uint8_t> bits) const {
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    if (!m.empty() && m.back() >= bits.size()) {
      throw std::out_of_range("no assignment for variable " + std::to_string(m.back()));
    }
    bool on = true;
    for (std::uint32_t v : m) {
      if (!bits[v]) {
        on = false;
        break;
      }
    }
    if (on) total += c;
  }
  return total;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  for (const auto& [m, c] : other.terms_) accumulate(m, c);
  return *this;
}

BinaryPolynomial& BinaryPolynomial::operator-=(const BinaryPolynomial& other) {
  for (const auto& [m, c] : other.terms_) accumulate(m, -c);
  return *this;
}

BinaryPolynomial& BinaryPolynomial::operator*=(double c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (std::abs(it->second) < kPruneThreshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

BinaryPolynomial& BinaryPolynomial::operator*=(const BinaryPolynomial& other) {
  *this = *this * other;
  return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  BinaryPolynomial out;
  BinaryPolynomial::Monomial merged;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      merged.clear();
      std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(),
                     std::back_inserter(merged));
      out.accumulate(merged, ca * cb);
    }
  }
  return out;
}

}  // namespace hpfold
