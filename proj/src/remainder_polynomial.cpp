#include "fores/remainder_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace fores {

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

const ProperFraction* RemainderPolynomial::find(const Word& word) const {
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.word == word; });
  return it == terms_.end() ? nullptr : &it->coefficient;
}

std::string RemainderPolynomial::render_text() const {
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    out += k == 0 ? "  " : "+ ";
    out += t.coefficient.str();
    if (!t.word.empty()) {
      out += " *";
      for (std::size_t i : t.word) out += " x_" + std::to_string(i);
    }
    out += "\n";
  }
  return out;
}

std::string RemainderPolynomial::render_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Term& t : terms_) {
    nlohmann::ordered_json j;
    j["word"] = t.word;
    j["numerators"] = t.coefficient.numerators();
    j["denominator"] = t.coefficient.denominator();
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

RemainderPolynomial expand(const ProperFraction& root) {
  if (!is_semi_unimodular(root))
    throw std::invalid_argument("remainder polynomial requires a semi-unimodular root, got " + root.str());

  RemainderPolynomial poly;
  std::vector<Term> stack{{Word{}, root}};
  while (!stack.empty()) {
    Term current = std::move(stack.back());
    stack.pop_back();
    if (!is_semi_unimodular(current.coefficient))
      throw std::domain_error("intermediate coefficient " + current.coefficient.str() +
                              " is not semi-unimodular");

    // Push in reverse so children pop in index order 1..n.
    const std::size_t n = current.coefficient.dim();
    for (std::size_t i = n; i >= 1; --i) {
      RemainderImage image = remainder_map(current.coefficient, i);
      if (image.is_infinity() || image.fraction().is_zero()) continue;
      Word child = current.word;
      child.push_back(i);
      stack.push_back({std::move(child), image.fraction()});
    }
    poly.terms_.push_back(std::move(current));
  }
  std::sort(poly.terms_.begin(), poly.terms_.end(),
            [](const Term& a, const Term& b) { return word_less(a.word, b.word); });
  return poly;
}

Int total_height(const RemainderPolynomial& p) {
  Int sum = 0;
  for (const Term& t : p.terms()) sum = checked_add(sum, height(t.coefficient));
  return sum;
}

Int size(const RemainderPolynomial& p) {
  Int sum = 0;
  for (const Term& t : p.terms()) sum = checked_add(sum, static_cast<Int>(t.coefficient.count_ones()));
  return sum;
}

}  // namespace fores
