#include <doctest.h>

#include <map>

#include <json.hpp>

#include "fores/remainder_polynomial.hpp"

using namespace fores;

namespace {

ProperFraction pf(std::vector<Int> a, Int r) { return ProperFraction(std::move(a), r); }

// Oracle: direct recursion over words written from the definitions, with its
// own residue arithmetic. Maps word -> (numerators, denominator).
using OracleTerms = std::map<std::vector<std::size_t>, std::pair<std::vector<Int>, Int>>;

void oracle_expand(const std::vector<Int>& a, Int r, std::vector<std::size_t> word, OracleTerms& out) {
  out[word] = {a, r};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Int pivot = a[i];
    if (pivot == 0) continue;  // infinity
    std::vector<Int> child(a.size());
    bool all_zero = true;
    for (std::size_t j = 0; j < a.size(); ++j) {
      Int v = (j == i) ? -r : a[j];
      child[j] = ((v % pivot) + pivot) % pivot;
      all_zero &= child[j] == 0;
    }
    if (all_zero && pivot == 1) continue;
    auto w = word;
    w.push_back(i + 1);
    oracle_expand(child, pivot, w, out);
  }
}

OracleTerms oracle(const ProperFraction& f) {
  OracleTerms t;
  oracle_expand(f.numerators(), f.denominator(), {}, t);
  return t;
}

Int oracle_size(const OracleTerms& t) {
  Int s = 0;
  for (const auto& [w, c] : t)
    for (Int x : c.first) s += x == 1;
  return s;
}

Int oracle_height(const OracleTerms& t) {
  Int h = 0;
  for (const auto& [w, c] : t) {
    for (Int x : c.first) h += x;
    h -= c.second;
  }
  return h;
}

void check_against_oracle(const ProperFraction& f) {
  RemainderPolynomial p = expand(f);
  OracleTerms t = oracle(f);
  REQUIRE(p.term_count() == t.size());
  for (const Term& term : p.terms()) {
    auto it = t.find(term.word);
    REQUIRE(it != t.end());
    CHECK(term.coefficient.numerators() == it->second.first);
    CHECK(term.coefficient.denominator() == it->second.second);
  }
  CHECK(size(p) == oracle_size(t));
  CHECK(total_height(p) == oracle_height(t));
}

template <class Fn>
void for_each_semi_unimodular(std::size_t n, Int r_max, Fn fn) {
  for (Int r = 2; r <= r_max; ++r) {
    std::vector<Int> a(n, 0);
    while (true) {
      ProperFraction f(a, r);
      if (is_semi_unimodular(f)) fn(f);
      std::size_t i = n;
      while (i > 0 && a[i - 1] == r - 1) a[--i] = 0;
      if (i == 0) break;
      ++a[i - 1];
    }
  }
}

}  // namespace

TEST_CASE("expand (1,2,7)/12 gives the five listed terms") {
  RemainderPolynomial p = expand(pf({1, 2, 7}, 12));
  std::vector<Term> expected{
      {{}, pf({1, 2, 7}, 12)},
      {{2}, pf({1, 0, 1}, 2)},
      {{3}, pf({1, 2, 2}, 7)},
      {{3, 2}, pf({1, 1, 0}, 2)},
      {{3, 3}, pf({1, 0, 1}, 2)},
  };
  CHECK(p.terms() == expected);
  CHECK(p.root() == pf({1, 2, 7}, 12));
  CHECK(total_height(p) == -4);
  CHECK(size(p) == 8);
  check_against_oracle(pf({1, 2, 7}, 12));
}

TEST_CASE("expand (1,2,5)/12 against the oracle") {
  // Oracle output frozen: words with their coefficients.
  RemainderPolynomial p = expand(pf({1, 2, 5}, 12));
  std::vector<Term> expected{
      {{}, pf({1, 2, 5}, 12)},   {{2}, pf({1, 0, 1}, 2)},     {{3}, pf({1, 2, 3}, 5)},
      {{3, 2}, pf({1, 1, 1}, 2)}, {{3, 3}, pf({1, 2, 1}, 3)}, {{3, 3, 2}, pf({1, 1, 1}, 2)},
  };
  CHECK(p.terms() == expected);
  CHECK(total_height(p) == 0);
  CHECK(size(p) == 12);
  check_against_oracle(pf({1, 2, 5}, 12));
}

TEST_CASE("expand (1,1,1)/3 is a single term") {
  RemainderPolynomial p = expand(pf({1, 1, 1}, 3));
  REQUIRE(p.term_count() == 1);
  CHECK(p.terms()[0].word.empty());
  CHECK(total_height(p) == 0);
  CHECK(size(p) == 3);
}

TEST_CASE("expand rejects a non-semi-unimodular root") {
  CHECK_THROWS_AS(expand(pf({2, 3}, 5)), std::invalid_argument);
}

TEST_CASE("text and JSON rendering") {
  RemainderPolynomial p = expand(pf({1, 2, 7}, 12));
  CHECK(p.render_text() ==
        "  (1,2,7)/12\n"
        "+ (1,0,1)/2 * x_2\n"
        "+ (1,2,2)/7 * x_3\n"
        "+ (1,1,0)/2 * x_3 x_2\n"
        "+ (1,0,1)/2 * x_3 x_3\n");
  auto j = nlohmann::json::parse(p.render_json());
  REQUIRE(j.size() == 5);
  CHECK(j[3]["word"] == nlohmann::json({3, 2}));
  CHECK(j[3]["numerators"] == nlohmann::json({1, 1, 0}));
  CHECK(j[3]["denominator"] == 2);
  CHECK(p.find({3, 3}) != nullptr);
  CHECK(p.find({1}) == nullptr);
}

TEST_CASE("expansion matches the brute-force recursion") {
  for_each_semi_unimodular(2, 40, check_against_oracle);
  for_each_semi_unimodular(3, 16, check_against_oracle);
  for_each_semi_unimodular(4, 7, check_against_oracle);
}

TEST_CASE("structural invariants and S = h + r, exhaustive") {
  auto check = [](const ProperFraction& v) {
    RemainderPolynomial p = expand(v);
    const Int r = v.denominator();
    CHECK(size(p) == total_height(p) + r);

    std::size_t empty_words = 0;
    for (std::size_t k = 0; k < p.terms().size(); ++k) {
      const Term& t = p.terms()[k];
      if (k > 0) CHECK(word_less(p.terms()[k - 1].word, t.word));
      CHECK_FALSE(t.coefficient.is_zero());
      if (t.word.empty()) {
        ++empty_words;
        CHECK(t.coefficient == v);
        continue;
      }
      // parent-child consistency and strictly decreasing denominators
      Word parent(t.word.begin(), t.word.end() - 1);
      const ProperFraction* pc = p.find(parent);
      REQUIRE(pc != nullptr);
      CHECK(t.coefficient.denominator() == pc->numerator(t.word.back() - 1));
      CHECK(t.coefficient.denominator() < pc->denominator());
    }
    CHECK(empty_words == 1);

    // S(R*(v)) = sum_i S(R*(R_i v)) + #ones(v), excluded children count 0.
    Int from_children = static_cast<Int>(v.count_ones());
    for (std::size_t i = 1; i <= v.dim(); ++i) {
      RemainderImage img = remainder_map(v, i);
      if (img.is_infinity() || img.fraction().is_zero()) continue;
      from_children += size(expand(img.fraction()));
    }
    CHECK(size(p) == from_children);

    // base case: all numerators in {0,1} gives only the root
    bool binary = true;
    for (Int x : v.numerators()) binary &= x <= 1;
    if (binary) {
      CHECK(p.term_count() == 1);
      CHECK(size(p) == static_cast<Int>(v.count_ones()));
      CHECK(total_height(p) == static_cast<Int>(v.count_ones()) - r);
    }
  };
  for_each_semi_unimodular(2, 40, check);
  for_each_semi_unimodular(3, 40, check);
  for_each_semi_unimodular(4, 15, check);
}
