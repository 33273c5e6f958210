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

#ifndef HPFOLD_POLYNOMIAL_HPP
#define HPFOLD_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace hpfold {

// Multilinear polynomial over binary variables. Terms are keyed by sorted,
// duplicate-free index sets; the empty set is the constant. Products apply
// x*x = x, and coefficients with magnitude below kPruneThreshold are dropped.
class BinaryPolynomial {
 public:
  using Monomial = std::vector<std::uint32_t>;
  using TermMap = std::map<Monomial, double>;

  static constexpr double kPruneThreshold = 1e-12;

  BinaryPolynomial() = default;

  static BinaryPolynomial constant(double c);
  static BinaryPolynomial variable(std::uint32_t index, double coefficient = 1.0);

  // Adds c * prod(vars); vars may be unsorted or contain repeats.
  void add_term(Monomial vars, double c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  double constant_term() const;
  // vars may be unsorted or contain repeats.
  double coefficient(Monomial vars) const;
  std::size_t degree() const;
  // One past the largest variable index referenced, 0 if none.
  std::size_t variable_span() const;

  // Throws std::out_of_range if a referenced variable is not covered.
  double evaluate(std::span<const std::uint8_t> bits) const;

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  BinaryPolynomial& operator-=(const BinaryPolynomial& other);
  BinaryPolynomial& operator*=(double c);
  BinaryPolynomial& operator*=(const BinaryPolynomial& other);

  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) { return a += b; }
  friend BinaryPolynomial operator-(BinaryPolynomial a, const BinaryPolynomial& b) { return a -= b; }
  friend BinaryPolynomial operator*(BinaryPolynomial a, double c) { return a *= c; }
  friend BinaryPolynomial operator*(double c, BinaryPolynomial a) { return a *= c; }
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);
  BinaryPolynomial operator-() const { return *this * -1.0; }

  bool operator==(const BinaryPolynomial&) const = default;

 private:
  void accumulate(const Monomial& m, double c);

  TermMap terms_;
};

inline BinaryPolynomial square(const BinaryPolynomial& p) { return p * p; }

}  // namespace hpfold

#endif  // HPFOLD_POLYNOMIAL_HPP
