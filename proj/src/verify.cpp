#include "fores/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fores {

SizeHeightCheck check_size_height_identity(const ProperFraction& v) {
  RemainderPolynomial p = expand(v);
  SizeHeightCheck c;
  c.size = size(p);
  c.height = total_height(p);
  c.order = v.denominator();
  c.holds = c.size == c.height + c.order;
  return c;
}

WeakMcKayCheck check_weak_mckay(const GroupType& g) {
  Fan fan = build_resolution(g);
  RemainderPolynomial p = expand(g.fraction());
  WeakMcKayCheck c;
  c.euler = euler_characteristic(fan);
  c.size = size(p);
  c.height = total_height(p);
  c.order = g.order();
  c.holds = c.euler == c.height + c.order;
  c.triangle = c.holds && c.euler == c.size;
  return c;
}

namespace {

bool all_ages_one(const RemainderPolynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const Term& t) { return age(t.coefficient) == Rational(1); });
}

}  // namespace

CrepancyCheck check_crepancy_equivalence(const GroupType& g) {
  CrepancyCheck c;
  c.by_ages = all_ages_one(expand(g.fraction()));
  c.by_fan = crepant_by_fan(build_resolution(g));
  c.equivalent = c.by_ages == c.by_fan;
  return c;
}

Rational HJExpansion::evaluate() const {
  if (entries.empty()) throw std::logic_error("empty Hirzebruch-Jung expansion");
  // Innermost first: value = c - 1/value.
  Int num = entries.back(), den = 1;
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    Int next = checked_sub(checked_mul(*it, num), den);
    den = num;
    num = next;
  }
  return Rational(num, den);
}

HJExpansion hj_expansion(Int r, Int a) {
  if (a <= 0 || a >= r || std::gcd(a, r) != 1)
    throw std::invalid_argument("Hirzebruch-Jung expansion needs 0 < a < r with gcd(a, r) = 1");
  HJExpansion out;
  while (a != 0) {
    Int c = (r + a - 1) / a;  // ceil(r / a)
    out.entries.push_back(c);
    Int next = c * a - r;
    r = a;
    a = next;
  }
  return out;
}

std::vector<LatticePoint> hull_boundary_2d(const GroupType& g) {
  if (g.dim() != 2) throw std::invalid_argument("hull_boundary_2d needs a 2-dimensional group");
  const Int r = g.order();
  std::vector<LatticePoint> pts;
  for (Int x = 0; x <= r; ++x)
    for (Int y = 0; y <= r; ++y) {
      if ((x == 0 && y == 0) || (x == r && y == r)) continue;
      LatticePoint p{{x, y}};
      if (lattice_contains(p, g)) pts.push_back(p);
    }
  // Sorted by x; the lower chain runs from e_2 = (0, r) down to e_1 = (r, 0).
  std::sort(pts.begin(), pts.end());
  auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.scaled[0] - o.scaled[0]) * (b.scaled[1] - o.scaled[1]) -
           (a.scaled[1] - o.scaled[1]) * (b.scaled[0] - o.scaled[0]);
  };
  std::vector<LatticePoint> hull;
  for (const LatticePoint& p : pts) {
    // Strict test keeps collinear boundary points.
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) < 0) hull.pop_back();
    hull.push_back(p);
  }
  // Drop vertical runs above the chain at x = 0 and x = r.
  auto last = std::find(hull.begin(), hull.end(), LatticePoint{{r, 0}});
  if (last != hull.end()) hull.erase(last + 1, hull.end());
  return hull;
}

Compare2D compare_2d(const GroupType& g) {
  Compare2D out;
  if (g.dim() != 2) {
    out.detail = "not a 2-dimensional group";
    return out;
  }
  const auto& w = g.weights();
  const Int a = w[0] == 1 ? w[1] : w[0];
  if (a == 0 || std::gcd(a, g.order()) != 1) {
    out.detail = "weights not coprime to r";
    return out;
  }
  out.applicable = true;
  out.expansion = hj_expansion(g.order(), a);

  Fan fan = build_resolution(g);
  std::vector<LatticePoint> rays = fan.exceptional_rays();
  out.exceptional_rays = rays.size();
  out.euler = euler_characteristic(fan);

  std::vector<LatticePoint> hull = hull_boundary_2d(g);
  out.rays_on_hull = std::all_of(rays.begin(), rays.end(), [&](const LatticePoint& p) {
    return std::find(hull.begin(), hull.end(), p) != hull.end();
  });

  const std::size_t len = out.expansion.entries.size();
  const bool count_ok = out.exceptional_rays == len;
  const bool euler_ok = out.euler == static_cast<Int>(len) + 1;
  out.ok = count_ok && euler_ok && out.rays_on_hull;
  if (!count_ok) out.detail += "ray count differs from expansion length; ";
  if (!euler_ok) out.detail += "chi != length + 1; ";
  if (!out.rays_on_hull) out.detail += "ray off the lattice hull boundary; ";
  return out;
}

GroupType family_type(Family family, Int k) {
  if (k < 1) throw std::invalid_argument("family index k must be >= 1");
  if (family == Family::Plus) return GroupType(ProperFraction({1, 3, 6 * k - 5}, 6 * k + 1));
  return GroupType(ProperFraction({1, 3, 3 * k - 2}, 6 * k - 1));
}

}  // namespace fores
