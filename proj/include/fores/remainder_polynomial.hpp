#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fores/fraction.hpp"

namespace fores {

/// Monomial x_{i1} x_{i2} ... x_{il}; indices are 1-based. The coefficient of
/// a word is R_{il} ... R_{i1} applied to the root, i.e. the first index is
/// applied first.
using Word = std::vector<std::size_t>;

/// Canonical term order: shorter words first, ties broken lexicographically.
bool word_less(const Word& a, const Word& b);

struct Term {
  Word word;
  ProperFraction coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// The remainder polynomial of a semi-unimodular root: all iterated
/// remainder-map images except infinity and (0,...,0)/1, in canonical order.
class RemainderPolynomial {
 public:
  const ProperFraction& root() const { return terms_.front().coefficient; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of `word`, or nullptr if the word does not appear.
  const ProperFraction* find(const Word& word) const;

  /// One term per line: "(1,2,7)/12", "+ (1,0,1)/2 * x_2", ...
  std::string render_text() const;
  /// JSON array of {"word": [...], "numerators": [...], "denominator": r}.
  std::string render_json() const;

 private:
  friend RemainderPolynomial expand(const ProperFraction& root);
  std::vector<Term> terms_;
};

/// Full expansion. Iterative depth-first traversal, children in index order;
/// terminates because denominators strictly decrease along each word.
/// Throws std::invalid_argument for a non-semi-unimodular root, and
/// std::domain_error if a retained intermediate coefficient is not
/// semi-unimodular.
RemainderPolynomial expand(const ProperFraction& root);

/// Sum of the heights of all coefficients.
Int total_height(const RemainderPolynomial& p);

/// Number of numerator entries equal to 1 across all coefficients.
Int size(const RemainderPolynomial& p);

}  // namespace fores
