#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fores/fraction.hpp"

namespace fores {

/// Cyclic group of type 1/r(a_1,...,a_n). The 1-entry may sit in any slot.
class GroupType {
 public:
  /// Throws std::invalid_argument unless r >= 2 and the fraction is
  /// semi-unimodular.
  explicit GroupType(ProperFraction fraction);

  const ProperFraction& fraction() const { return fraction_; }
  Int order() const { return fraction_.denominator(); }
  std::size_t dim() const { return fraction_.dim(); }
  const std::vector<Int>& weights() const { return fraction_.numerators(); }
  /// "1/r(a1,...,an)"
  std::string str() const;

 private:
  ProperFraction fraction_;
};

/// Point of (1/r)Z^n stored as its r-scaled integer coordinates. e_i is
/// r times the i-th unit vector and the group generator is (a_1,...,a_n).
struct LatticePoint {
  std::vector<Int> scaled;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint axis_point(const GroupType& g, std::size_t i);

/// Membership in N_G = Z^n + Z·(a/r).
bool lattice_contains(const LatticePoint& p, const GroupType& g);

/// p/k for the largest k with p/k in N_G. Throws std::invalid_argument when
/// p is zero or outside N_G.
LatticePoint primitive_in_lattice(const LatticePoint& p, const GroupType& g);

/// sum(scaled) - r, i.e. the height of the point written as b/r.
Int lattice_height(const LatticePoint& p, const GroupType& g);

// Exact dense linear algebra on small integer matrices (row-major).
using IntMatrix = std::vector<std::vector<Int>>;

/// Fraction-free Bareiss elimination with 128-bit intermediates.
Int determinant(const IntMatrix& m);

/// adj(M) with adj(M)·M = det(M)·I.
IntMatrix adjugate(const IntMatrix& m);

/// Matrix whose columns are the given points.
IntMatrix column_matrix(std::span<const LatticePoint> columns);

/// Generator of the kernel of a (n-1) x n matrix via signed maximal minors;
/// the zero vector when the rows are dependent.
std::vector<Int> kernel_vector(const IntMatrix& rows);

}  // namespace fores
