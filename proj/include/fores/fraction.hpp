#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fores/int_math.hpp"

namespace fores {

/// An n-dimensional proper fraction (a_1,...,a_n)/r with 0 <= a_i <= r-1 and
/// n >= 2. Immutable once constructed. The all-zero fraction (0,...,0)/1 is
/// representable; callers that need a group type reject it separately.
class ProperFraction {
 public:
  /// Throws std::invalid_argument if the tuple violates the range constraints.
  ProperFraction(std::vector<Int> numerators, Int denominator);

  /// Parses "(a1,a2,...,an)/r"; whitespace around tokens is ignored.
  static ProperFraction parse(std::string_view text);

  const std::vector<Int>& numerators() const { return numerators_; }
  Int numerator(std::size_t i) const { return numerators_.at(i); }
  Int denominator() const { return denominator_; }
  std::size_t dim() const { return numerators_.size(); }

  bool is_zero() const;
  /// Number of numerator entries equal to 1.
  std::size_t count_ones() const;

  std::string str() const;

  friend bool operator==(const ProperFraction&, const ProperFraction&) = default;
  friend auto operator<=>(const ProperFraction&, const ProperFraction&) = default;

 private:
  std::vector<Int> numerators_;
  Int denominator_;
};

/// Result of a remainder map: a finite proper fraction or infinity.
class RemainderImage {
 public:
  static RemainderImage infinity() { return RemainderImage(); }
  static RemainderImage finite(ProperFraction f) { return RemainderImage(std::move(f)); }

  bool is_infinity() const { return !value_.has_value(); }
  /// Throws std::logic_error when called on infinity.
  const ProperFraction& fraction() const;

  friend bool operator==(const RemainderImage&, const RemainderImage&) = default;

 private:
  RemainderImage() = default;
  explicit RemainderImage(ProperFraction f) : value_(std::move(f)) {}
  std::optional<ProperFraction> value_;
};

bool is_semi_unimodular(const ProperFraction& f);

/// i-th remainder map, i is 1-based. Requires a semi-unimodular argument.
RemainderImage remainder_map(const ProperFraction& f, std::size_t i);

/// sum(a_i) - r
Int height(const ProperFraction& f);

/// sum(a_i) / r, reduced.
Rational age(const ProperFraction& f);

}  // namespace fores
