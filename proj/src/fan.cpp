#include "fores/fan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fores {

Cone root_cone(const GroupType& g) {
  Cone c{{}, g.fraction(), {}};
  for (std::size_t i = 0; i < g.dim(); ++i) c.generators.push_back(axis_point(g, i));
  return c;
}

Int cone_multiplicity(const Cone& c, const GroupType& g) {
  const std::size_t n = g.dim();
  if (c.generators.size() != n) throw std::invalid_argument("cone must have n generators");
  Int det = determinant(column_matrix(c.generators));
  if (det == 0) throw std::invalid_argument("cone generators are linearly dependent");
  Int covolume = 1;
  for (std::size_t i = 1; i < n; ++i) covolume = checked_mul(covolume, g.order());
  if (det % covolume != 0)
    throw std::domain_error("determinant " + std::to_string(det) + " not divisible by r^(n-1)");
  det /= covolume;
  return det < 0 ? -det : det;
}

StarSubdivision star_subdivide(const Cone& c, const GroupType& g) {
  const ProperFraction& local = c.local_type;
  const Int s = local.denominator();
  if (s < 2) throw std::invalid_argument("star subdivision of a smooth cone");
  if (!is_semi_unimodular(local))
    throw std::invalid_argument("local type " + local.str() + " is not semi-unimodular");
  const std::size_t n = g.dim();
  if (c.generators.size() != n || local.dim() != n) throw std::invalid_argument("dimension mismatch");

  LatticePoint w{std::vector<Int>(n, 0)};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      w.scaled[i] = checked_add(w.scaled[i], checked_mul(local.numerator(k), c.generators[k].scaled[i]));
  for (Int& x : w.scaled) {
    if (x % s != 0) throw std::domain_error("subdivision point is not integral in r-scaled coordinates");
    x /= s;
  }
  if (!lattice_contains(w, g)) throw std::domain_error("subdivision point is not in N_G");

  StarSubdivision out{w, {}};
  for (std::size_t k = 0; k < n; ++k) {
    if (local.numerator(k) == 0) continue;
    Cone child{c.generators, remainder_map(local, k + 1).fraction(), c.word};
    child.generators[k] = w;
    child.word.push_back(k + 1);
    out.children.push_back(std::move(child));
  }
  return out;
}

std::optional<std::size_t> Fan::find_ray(const LatticePoint& p) const {
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i].point == p) return i;
  return std::nullopt;
}

std::vector<LatticePoint> Fan::exceptional_rays() const {
  std::vector<LatticePoint> out;
  for (const Ray& r : rays)
    if (r.exceptional) out.push_back(r.point);
  return out;
}

namespace {

Ray make_ray(const LatticePoint& p, const GroupType& g, bool exceptional) {
  return Ray{p, exceptional, Rational(checked_add(lattice_height(p, g), g.order()), g.order()),
             discrepancy(p, g)};
}

}  // namespace

Fan build_resolution(const GroupType& g, std::optional<std::size_t> max_depth) {
  Fan fan{g, {}, {}, {}};
  std::map<LatticePoint, std::size_t> index;
  auto ray_index = [&](const LatticePoint& p) {
    auto [it, inserted] = index.emplace(p, fan.rays.size());
    if (inserted) fan.rays.push_back(make_ray(p, g, fan.rays.size() >= g.dim()));
    return it->second;
  };

  Cone root = root_cone(g);
  std::vector<std::size_t> root_rays;
  for (const LatticePoint& p : root.generators) root_rays.push_back(ray_index(p));
  fan.tree.push_back(TreeNode{root.word, root.local_type, root_rays, std::nullopt, {}});

  struct Pending {
    Cone cone;
    std::size_t node;
  };
  std::vector<Pending> stack{{std::move(root), 0}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();

    const bool at_limit = max_depth && cur.cone.word.size() >= *max_depth;
    if (cur.cone.local_type.denominator() < 2 || at_limit) {
      FanCone leaf{cur.cone, fan.tree[cur.node].ray_indices, cone_multiplicity(cur.cone, g)};
      fan.max_cones.push_back(std::move(leaf));
      continue;
    }

    StarSubdivision sub = star_subdivide(cur.cone, g);
    const std::size_t w = ray_index(sub.new_ray);
    fan.tree[cur.node].new_ray = w;

    std::vector<Pending> children;
    for (Cone& child : sub.children) {
      std::vector<std::size_t> ids;
      for (const LatticePoint& p : child.generators) ids.push_back(ray_index(p));
      const std::size_t node = fan.tree.size();
      fan.tree.push_back(TreeNode{child.word, child.local_type, std::move(ids), std::nullopt, {}});
      fan.tree[cur.node].children.push_back(node);
      children.push_back({std::move(child), node});
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  return fan;
}

Int euler_characteristic(const Fan& f) { return static_cast<Int>(f.max_cones.size()); }

Rational discrepancy(const LatticePoint& ray, const GroupType& g) {
  LatticePoint prim = primitive_in_lattice(ray, g);
  return Rational(lattice_height(prim, g), g.order());
}

bool crepant_by_fan(const Fan& f) {
  return std::all_of(f.rays.begin(), f.rays.end(),
                     [](const Ray& r) { return !r.exceptional || r.discrepancy == Rational(0); });
}

ResolutionReport make_report(const Fan& f, const RemainderPolynomial& p, FanValidation validation) {
  ResolutionReport rep;
  rep.euler = euler_characteristic(f);
  rep.total_height = total_height(p);
  rep.size = size(p);
  rep.crepant = crepant_by_fan(f);
  for (const Ray& r : f.rays) rep.discrepancies.emplace_back(r.point, r.discrepancy);
  rep.validation = std::move(validation);
  return rep;
}

}  // namespace fores
