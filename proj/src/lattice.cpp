#include "fores/lattice.hpp"

#include "small_linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace fores {

GroupType::GroupType(ProperFraction fraction) : fraction_(std::move(fraction)) {
  if (fraction_.denominator() < 2)
    throw std::invalid_argument("group type needs r >= 2, got " + fraction_.str());
  if (!is_semi_unimodular(fraction_))
    throw std::invalid_argument("group type must be semi-unimodular, got " + fraction_.str());
}

std::string GroupType::str() const {
  std::string s = fraction_.str();
  return "1/" + std::to_string(order()) + s.substr(0, s.find('/'));
}

LatticePoint axis_point(const GroupType& g, std::size_t i) {
  LatticePoint p{std::vector<Int>(g.dim(), 0)};
  p.scaled.at(i) = g.order();
  return p;
}

bool lattice_contains(const LatticePoint& p, const GroupType& g) {
  const auto& w = g.weights();
  if (p.scaled.size() != w.size()) return false;
  // Some weight equals 1, which pins the multiplier m modulo r.
  std::size_t unit = 0;
  while (w[unit] != 1) ++unit;
  const Int r = g.order();
  const Int m = floor_mod(p.scaled[unit], r);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (floor_mod(p.scaled[i], r) != floor_mod(checked_mul(m, w[i]), r)) return false;
  return true;
}

LatticePoint primitive_in_lattice(const LatticePoint& p, const GroupType& g) {
  if (!lattice_contains(p, g)) throw std::invalid_argument("point is not in N_G");
  Int common = 0;
  for (Int c : p.scaled) common = std::gcd(common, c);
  if (common == 0) throw std::invalid_argument("zero vector has no primitive element");
  // Any k with p/k in (1/r)Z^n divides the content of the scaled vector.
  for (Int k = common; k >= 1; --k) {
    if (common % k) continue;
    LatticePoint q{p.scaled};
    for (Int& c : q.scaled) c /= k;
    if (lattice_contains(q, g)) return q;
  }
  return p;  // unreachable: k = 1 always succeeds
}

Int lattice_height(const LatticePoint& p, const GroupType& g) {
  Int sum = 0;
  for (Int c : p.scaled) sum = checked_add(sum, c);
  return checked_sub(sum, g.order());
}

namespace {

std::vector<Int> flatten(const IntMatrix& m, std::size_t cols) {
  std::vector<Int> flat;
  flat.reserve(m.size() * cols);
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

}  // namespace

Int determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Int> flat = flatten(m, n);
  return narrow(detail::bareiss(flat.data(), n, n));
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix adj(n, std::vector<Int>(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  std::vector<Int> flat = flatten(m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int cof = narrow(detail::minor_det(flat.data(), n, n, j, i));
      adj[i][j] = ((i + j) % 2) ? -cof : cof;
    }
  return adj;
}

IntMatrix column_matrix(std::span<const LatticePoint> columns) {
  const std::size_t n = columns.empty() ? 0 : columns.front().scaled.size();
  IntMatrix m(n, std::vector<Int>(columns.size(), 0));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = columns[j].scaled.at(i);
  return m;
}

std::vector<Int> kernel_vector(const IntMatrix& rows) {
  if (rows.empty()) throw std::invalid_argument("kernel_vector of an empty matrix");
  const std::size_t n = rows.front().size();
  if (rows.size() + 1 != n) throw std::invalid_argument("kernel_vector expects an (n-1) x n matrix");
  std::vector<Int> flat = flatten(rows, n);
  std::vector<Int> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Int d = narrow(detail::minor_det(flat.data(), n - 1, n, n - 1, j));
    out[j] = (j % 2) ? -d : d;
  }
  return out;
}

}  // namespace fores
