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

#include "prefcomp/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace prefcomp {

bool UnitIntervalCarrier::equal(double a, double b) const {
  return std::fabs(a - b) <= kTolerance;
}

std::string UnitIntervalCarrier::format(double a) const {
  std::ostringstream out;
  out.precision(17);
  out << a;
  return out.str();
}

void UnitIntervalCarrier::require(double a) const {
  if (!contains(a))
    throw DomainError("value " + format(a) + " is outside [0, 1]");
}

double FuzzySemiring::combine(double a, double b) const {
  require(a);
  require(b);
  return std::min(a, b);
}

double FuzzySemiring::lub(double a, double b) const {
  require(a);
  require(b);
  return std::max(a, b);
}

double ProbabilisticSemiring::combine(double a, double b) const {
  require(a);
  require(b);
  return a * b;
}

double ProbabilisticSemiring::lub(double a, double b) const {
  require(a);
  require(b);
  return std::max(a, b);
}

Penalty::Penalty(BigInt value) : value_(std::move(value)) {
  if (value_ < 0)
    throw DomainError("negative penalty " + value_.str() +
                      " is outside the weighted carrier");
}

Penalty Penalty::infinity() {
  Penalty p;
  p.infinite_ = true;
  return p;
}

const BigInt& Penalty::value() const {
  if (infinite_) throw DomainError("infinite penalty has no finite value");
  return value_;
}

std::string Penalty::to_string() const {
  return infinite_ ? "inf" : value_.str();
}

Penalty operator+(const Penalty& a, const Penalty& b) {
  if (a.infinite_ || b.infinite_) return Penalty::infinity();
  return Penalty(a.value_ + b.value_);
}

Penalty operator*(const BigInt& scale, const Penalty& p) {
  if (scale < 0) throw DomainError("negative penalty scale");
  if (p.infinite_) return scale == 0 ? Penalty() : Penalty::infinity();
  return Penalty(scale * p.value_);
}

bool operator==(const Penalty& a, const Penalty& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Penalty& a, const Penalty& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string SloValue::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(digits_[i]);
  }
  return out + ")";
}

std::string_view to_string(SloCombine mode) {
  return mode == SloCombine::kLexMin ? "lexmin" : "pointwise-min";
}

SloCombine parse_slo_combine(std::string_view text) {
  if (text == "lexmin") return SloCombine::kLexMin;
  if (text == "pointwise-min") return SloCombine::kPointwiseMin;
  throw Error("unknown SLO combination '" + std::string(text) +
              "' (expected lexmin or pointwise-min)");
}

SloSemiring::SloSemiring(std::size_t length, int max, SloCombine mode)
    : length_(length), max_(max), mode_(mode) {
  if (max_ < 0) throw DomainError("SLO MAX must be nonnegative");
}

SloValue SloSemiring::zero() const {
  return SloValue(std::vector<int>(length_, 0));
}

SloValue SloSemiring::one() const {
  return SloValue(std::vector<int>(length_, max_));
}

SloValue SloSemiring::one_except(std::size_t position, int digit) const {
  std::vector<int> digits(length_, max_);
  if (position >= length_ || digit < 0 || digit > max_)
    throw DomainError("SLO digit " + std::to_string(digit) + " at position " +
                      std::to_string(position) + " is outside the carrier");
  digits[position] = digit;
  return SloValue(std::move(digits));
}

bool SloSemiring::contains(const SloValue& a) const {
  if (a.size() != length_) return false;
  return std::all_of(a.digits().begin(), a.digits().end(),
                     [&](int d) { return d >= 0 && d <= max_; });
}

void SloSemiring::require(const SloValue& a) const {
  if (!contains(a))
    throw DomainError("sequence " + a.to_string() +
                      " is outside the SLO carrier of length " +
                      std::to_string(length_) + " and MAX " +
                      std::to_string(max_));
}

SloValue SloSemiring::combine(const SloValue& a, const SloValue& b) const {
  require(a);
  require(b);
  if (mode_ == SloCombine::kLexMin) return a < b ? a : b;
  std::vector<int> digits(length_);
  for (std::size_t i = 0; i < length_; ++i) digits[i] = std::min(a[i], b[i]);
  return SloValue(std::move(digits));
}

SloValue SloSemiring::lub(const SloValue& a, const SloValue& b) const {
  require(a);
  require(b);
  return a > b ? a : b;
}

std::vector<SloValue> SloSemiring::enumerate() const {
  std::vector<SloValue> out;
  std::vector<int> digits(length_, 0);
  while (true) {
    out.emplace_back(digits);
    std::size_t i = length_;
    while (i > 0 && digits[i - 1] == max_) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

bool AxiomReport::violates(std::string_view axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const AxiomViolation& v) { return v.axiom == axiom; });
}

}  // namespace prefcomp
