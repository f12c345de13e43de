#include "fores/fraction.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace fores {

ProperFraction::ProperFraction(std::vector<Int> numerators, Int denominator)
    : numerators_(std::move(numerators)), denominator_(denominator) {
  if (numerators_.size() < 2) throw std::invalid_argument("proper fraction needs dimension >= 2");
  if (denominator_ < 1) throw std::invalid_argument("proper fraction needs a positive denominator");
  for (Int a : numerators_) {
    if (a < 0 || a > denominator_ - 1)
      throw std::invalid_argument("numerator " + std::to_string(a) + " outside [0, " +
                                  std::to_string(denominator_ - 1) + "]");
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s) {
  s = trim(s);
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

ProperFraction ProperFraction::parse(std::string_view text) {
  text = trim(text);
  auto close = text.find(')');
  if (text.empty() || text.front() != '(' || close == std::string_view::npos)
    throw std::invalid_argument("expected '(a1,...,an)/r', got '" + std::string(text) + "'");
  auto rest = trim(text.substr(close + 1));
  if (rest.empty() || rest.front() != '/')
    throw std::invalid_argument("missing '/r' in '" + std::string(text) + "'");
  Int r = parse_int(rest.substr(1));

  std::vector<Int> nums;
  auto body = text.substr(1, close - 1);
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    nums.push_back(parse_int(body.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ProperFraction(std::move(nums), r);
}

bool ProperFraction::is_zero() const {
  return std::all_of(numerators_.begin(), numerators_.end(), [](Int a) { return a == 0; });
}

std::size_t ProperFraction::count_ones() const {
  return static_cast<std::size_t>(std::count(numerators_.begin(), numerators_.end(), Int{1}));
}

std::string ProperFraction::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(numerators_[i]);
  }
  out += ")/" + std::to_string(denominator_);
  return out;
}

const ProperFraction& RemainderImage::fraction() const {
  if (!value_) throw std::logic_error("remainder image is infinity");
  return *value_;
}

bool is_semi_unimodular(const ProperFraction& f) { return f.count_ones() > 0; }

RemainderImage remainder_map(const ProperFraction& f, std::size_t i) {
  if (!is_semi_unimodular(f))
    throw std::invalid_argument("remainder map requires a semi-unimodular fraction, got " + f.str());
  if (i < 1 || i > f.dim()) throw std::out_of_range("remainder map index out of range");
  const Int pivot = f.numerator(i - 1);
  if (pivot == 0) return RemainderImage::infinity();

  std::vector<Int> out(f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) {
    Int entry = (j == i - 1) ? -f.denominator() : f.numerator(j);
    out[j] = floor_mod(entry, pivot);
  }
  return RemainderImage::finite(ProperFraction(std::move(out), pivot));
}

Int height(const ProperFraction& f) {
  Int sum = 0;
  for (Int a : f.numerators()) sum = checked_add(sum, a);
  return checked_sub(sum, f.denominator());
}

Rational age(const ProperFraction& f) {
  return Rational(checked_add(height(f), f.denominator()), f.denominator());
}

}  // namespace fores
