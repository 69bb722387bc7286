// Copyright 2026 The prefcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PREFCOMP_SEMIRING_HPP
#define PREFCOMP_SEMIRING_HPP

// c-semiring algebra: the concept every soft-constraint problem is generic
// over, the built-in instances (classical, fuzzy, probabilistic, weighted
// and SLO), and an empirical axiom checker.
//
// Convention: lub(a, b) is the semiring "+", combine(a, b) is "x", and
// leq(a, b) holds iff lub(a, b) == b, i.e. b is at least as good as a.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prefcomp/error.hpp"

namespace prefcomp {

using BigInt = boost::multiprecision::cpp_int;

template <class S>
concept CSemiring = requires(const S& s, const typename S::value_type& a) {
  typename S::value_type;
  { S::kTotallyOrdered } -> std::convertible_to<bool>;
  { s.name() } -> std::convertible_to<std::string_view>;
  { s.zero() } -> std::convertible_to<typename S::value_type>;
  { s.one() } -> std::convertible_to<typename S::value_type>;
  { s.contains(a) } -> std::convertible_to<bool>;
  { s.combine(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.lub(a, a) } -> std::convertible_to<typename S::value_type>;
  { s.equal(a, a) } -> std::convertible_to<bool>;
  { s.format(a) } -> std::convertible_to<std::string>;
};

template <CSemiring S>
bool leq(const S& s, const typename S::value_type& a,
         const typename S::value_type& b) {
  return s.equal(s.lub(a, b), b);
}

// a is strictly worse than b.
template <CSemiring S>
bool less(const S& s, const typename S::value_type& a,
          const typename S::value_type& b) {
  return leq(s, a, b) && !s.equal(a, b);
}

// <{false, true}, or, and, false, true>
struct ClassicalSemiring {
  using value_type = bool;
  static constexpr bool kTotallyOrdered = true;

  std::string_view name() const { return "classical"; }
  bool zero() const { return false; }
  bool one() const { return true; }
  bool contains(bool) const { return true; }
  bool combine(bool a, bool b) const { return a && b; }
  bool lub(bool a, bool b) const { return a || b; }
  bool equal(bool a, bool b) const { return a == b; }
  std::string format(bool a) const { return a ? "true" : "false"; }
};

// Shared carrier for the two [0, 1] instances.
class UnitIntervalCarrier {
 public:
  static constexpr double kTolerance = 1e-12;

  bool contains(double a) const { return a >= 0.0 && a <= 1.0; }
  bool equal(double a, double b) const;
  std::string format(double a) const;

 protected:
  void require(double a) const;
};

// <[0, 1], max, min, 0, 1>
class FuzzySemiring : public UnitIntervalCarrier {
 public:
  using value_type = double;
  static constexpr bool kTotallyOrdered = true;

  std::string_view name() const { return "fuzzy"; }
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double combine(double a, double b) const;
  double lub(double a, double b) const;
};

// <[0, 1], max, *, 0, 1>
class ProbabilisticSemiring : public UnitIntervalCarrier {
 public:
  using value_type = double;
  static constexpr bool kTotallyOrdered = true;

  std::string_view name() const { return "probabilistic"; }
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double combine(double a, double b) const;
  double lub(double a, double b) const;
};

// Nonnegative exact integer penalty, or +infinity.
class Penalty {
 public:
  Penalty() = default;
  explicit Penalty(BigInt value);
  explicit Penalty(std::int64_t value) : Penalty(BigInt(value)) {}

  static Penalty infinity();

  bool is_infinite() const { return infinite_; }
  // Throws DomainError for +infinity.
  const BigInt& value() const;
  std::string to_string() const;

  friend Penalty operator+(const Penalty& a, const Penalty& b);
  friend Penalty operator*(const BigInt& scale, const Penalty& p);
  friend bool operator==(const Penalty& a, const Penalty& b);
  friend std::strong_ordering operator<=>(const Penalty& a, const Penalty& b);

 private:
  BigInt value_ = 0;
  bool infinite_ = false;
};

// The weighted (min+) semiring <N u {+inf}, min, +, +inf, 0>; lower is
// better.
struct WeightedSemiring {
  using value_type = Penalty;
  static constexpr bool kTotallyOrdered = true;

  std::string_view name() const { return "minplus"; }
  Penalty zero() const { return Penalty::infinity(); }
  Penalty one() const { return Penalty(); }
  bool contains(const Penalty&) const { return true; }
  Penalty combine(const Penalty& a, const Penalty& b) const { return a + b; }
  Penalty lub(const Penalty& a, const Penalty& b) const {
    return a <= b ? a : b;
  }
  bool equal(const Penalty& a, const Penalty& b) const { return a == b; }
  std::string format(const Penalty& a) const { return a.to_string(); }
};

// Fixed-length integer sequence ordered lexicographically.
class SloValue {
 public:
  SloValue() = default;
  explicit SloValue(std::vector<int> digits) : digits_(std::move(digits)) {}

  const std::vector<int>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  int operator[](std::size_t i) const { return digits_[i]; }
  std::string to_string() const;

  friend bool operator==(const SloValue&, const SloValue&) = default;
  friend std::strong_ordering operator<=>(const SloValue& a,
                                          const SloValue& b) {
    return a.digits_ <=> b.digits_;
  }

 private:
  std::vector<int> digits_;
};

enum class SloCombine {
  // min_s: the lexicographically smaller sequence.
  kLexMin,
  // Element-wise minimum. Not distributive over the lexicographic lub, so
  // this variant is not a c-semiring; it trades that for strict
  // preservation of worsening flips.
  kPointwiseMin,
};

std::string_view to_string(SloCombine mode);
SloCombine parse_slo_combine(std::string_view text);

// <sequences of `length` integers in [0, max], max_s, min_s, MAX, 0>
class SloSemiring {
 public:
  using value_type = SloValue;
  static constexpr bool kTotallyOrdered = true;

  SloSemiring(std::size_t length, int max,
              SloCombine mode = SloCombine::kLexMin);

  std::string_view name() const { return "slo"; }
  std::size_t length() const { return length_; }
  int max() const { return max_; }
  SloCombine mode() const { return mode_; }

  SloValue zero() const;
  SloValue one() const;
  // The all-MAX sequence with `position` replaced by `digit`.
  SloValue one_except(std::size_t position, int digit) const;

  bool contains(const SloValue& a) const;
  SloValue combine(const SloValue& a, const SloValue& b) const;
  SloValue lub(const SloValue& a, const SloValue& b) const;
  bool equal(const SloValue& a, const SloValue& b) const { return a == b; }
  std::string format(const SloValue& a) const { return a.to_string(); }

  // Every sequence of the carrier, in lexicographic order.
  std::vector<SloValue> enumerate() const;

 private:
  void require(const SloValue& a) const;

  std::size_t length_;
  int max_;
  SloCombine mode_;
};

struct AxiomViolation {
  std::string axiom;
  std::string witness;
  std::size_t occurrences = 0;
};

struct AxiomReport {
  // One record per violated axiom, in first-seen order.
  std::vector<AxiomViolation> violations;
  std::size_t triples_checked = 0;

  bool ok() const { return violations.empty(); }
  bool violates(std::string_view axiom) const;
};

namespace detail {

template <CSemiring S>
class AxiomChecker {
 public:
  using V = typename S::value_type;

  explicit AxiomChecker(const S& s) : s_(s) {}

  void check_elements(std::span<const V> samples) {
    const V zero = s_.zero();
    const V one = s_.one();
    for (const V& a : samples) {
      if (!s_.contains(a)) {
        fail("carrier membership", s_.format(a));
        continue;
      }
      expect(s_.equal(s_.lub(a, a), a), "lub idempotence", {a});
      expect(s_.equal(s_.lub(a, zero), a), "lub unit (zero)", {a});
      expect(s_.equal(s_.lub(a, one), one), "lub absorbing (one)", {a});
      expect(s_.equal(s_.combine(a, one), a), "combine unit (one)", {a});
      expect(s_.equal(s_.combine(a, zero), zero), "combine absorbing (zero)",
             {a});
      expect(leq(s_, a, a), "leq reflexivity", {a});
      expect(leq(s_, zero, a), "zero minimum", {a});
      expect(leq(s_, a, one), "one maximum", {a});
    }
  }

  void check_triple(const V& a, const V& b, const V& c) {
    if (!s_.contains(a) || !s_.contains(b) || !s_.contains(c)) return;
    ++report_.triples_checked;
    expect(s_.equal(s_.lub(a, b), s_.lub(b, a)), "lub commutativity", {a, b});
    expect(s_.equal(s_.combine(a, b), s_.combine(b, a)),
           "combine commutativity", {a, b});
    expect(s_.equal(s_.lub(a, s_.lub(b, c)), s_.lub(s_.lub(a, b), c)),
           "lub associativity", {a, b, c});
    expect(s_.equal(s_.combine(a, s_.combine(b, c)),
                    s_.combine(s_.combine(a, b), c)),
           "combine associativity", {a, b, c});
    expect(s_.equal(s_.combine(a, s_.lub(b, c)),
                    s_.lub(s_.combine(a, b), s_.combine(a, c))),
           "distributivity", {a, b, c});
    const bool ab = leq(s_, a, b);
    const bool ba = leq(s_, b, a);
    expect(!(ab && ba) || s_.equal(a, b), "leq antisymmetry", {a, b});
    expect(!(ab && leq(s_, b, c)) || leq(s_, a, c), "leq transitivity",
           {a, b, c});
    if (ab) {
      expect(leq(s_, s_.combine(a, c), s_.combine(b, c)),
             "combine monotonicity", {a, b, c});
      expect(leq(s_, s_.lub(a, c), s_.lub(b, c)), "lub monotonicity",
             {a, b, c});
    }
  }

  AxiomReport take() { return std::move(report_); }

 private:
  void expect(bool holds, std::string_view axiom,
              std::initializer_list<V> witness) {
    if (holds) return;
    std::string text = "(";
    bool first = true;
    for (const V& v : witness) {
      if (!first) text += ", ";
      text += s_.format(v);
      first = false;
    }
    text += ")";
    fail(axiom, text);
  }

  void fail(std::string_view axiom, std::string witness) {
    for (auto& v : report_.violations) {
      if (v.axiom == axiom) {
        ++v.occurrences;
        return;
      }
    }
    report_.violations.push_back({std::string(axiom), std::move(witness), 1});
  }

  const S& s_;
  AxiomReport report_;
};

}  // namespace detail

// Checks every c-semiring axiom on all elements, pairs and triples drawn
// from `samples`. Cubic in the sample count.
template <CSemiring S>
AxiomReport check_axioms(const S& s,
                         std::span<const typename S::value_type> samples) {
  detail::AxiomChecker<S> checker(s);
  checker.check_elements(samples);
  for (const auto& a : samples)
    for (const auto& b : samples)
      for (const auto& c : samples) checker.check_triple(a, b, c);
  return checker.take();
}

// Same axioms, but on `triples` triples drawn uniformly from `samples`.
template <CSemiring S>
AxiomReport check_axioms_sampled(
    const S& s, std::span<const typename S::value_type> samples,
    std::size_t triples, std::mt19937_64& rng) {
  detail::AxiomChecker<S> checker(s);
  checker.check_elements(samples);
  if (samples.empty()) return checker.take();
  std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
  for (std::size_t i = 0; i < triples; ++i)
    checker.check_triple(samples[pick(rng)], samples[pick(rng)],
                         samples[pick(rng)]);
  return checker.take();
}

}  // namespace prefcomp

#endif  // PREFCOMP_SEMIRING_HPP
