#include "fores/fan.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <omp.h>

#include "small_linalg.hpp"

namespace fores {

namespace {

// Cone(g_1..g_n) = { x : (sign·adj(M) x)_k >= 0 for all k }; row-major n x n.
struct Halfspaces {
  std::size_t dim = 0;
  std::vector<Int> normals;
  const Int* row(std::size_t k) const { return normals.data() + k * dim; }
};

Halfspaces halfspaces_of(const Cone& c) {
  IntMatrix m = column_matrix(c.generators);
  Int det = determinant(m);
  IntMatrix adj = adjugate(m);
  Halfspaces h{m.size(), {}};
  for (const auto& row : adj)
    for (Int x : row) h.normals.push_back(det < 0 ? -x : x);
  return h;
}

Wide dot(const Int* a, const Int* b, std::size_t n) {
  Wide s = 0;
  for (std::size_t i = 0; i < n; ++i) s = wide_add(s, wide_mul(a[i], b[i]));
  return s;
}

enum class Location { Outside, Boundary, Interior };

Location locate(const Halfspaces& h, const std::vector<Int>& x) {
  bool boundary = false;
  for (std::size_t k = 0; k < h.dim; ++k) {
    Wide v = dot(h.row(k), x.data(), h.dim);
    if (v < 0) return Location::Outside;
    if (v == 0) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Interior;
}

struct PointVerdict {
  bool covered = false;
  bool overlap = false;
};

PointVerdict classify(const std::vector<Halfspaces>& cones, const LatticePoint& p) {
  std::size_t interior = 0, boundary = 0;
  for (const auto& h : cones) {
    switch (locate(h, p.scaled)) {
      case Location::Interior: ++interior; break;
      case Location::Boundary: ++boundary; break;
      case Location::Outside: break;
    }
  }
  PointVerdict v;
  v.covered = interior + boundary > 0;
  // A point strictly inside one cone must not lie in any other cone.
  v.overlap = interior > 1 || (interior == 1 && boundary > 0);
  return v;
}

bool positive_multiple(const Int* u, const std::vector<Int>& g) {
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (wide_mul(u[i], g[j]) != wide_mul(u[j], g[i])) return false;
  return dot(u, g.data(), n) > 0;
}

// The intersection of two simplicial cones is a common face iff every extreme
// ray of the intersection is a generator shared by both cones. Extreme rays
// are the feasible kernels of n-1 linearly independent tight inequalities.
bool faces_compatible(const FanCone& a, const Halfspaces& ha, const FanCone& b, const Halfspaces& hb,
                      const Fan& fan) {
  const std::size_t n = ha.dim;
  const std::size_t m = 2 * n;
  std::vector<Int> ineq(ha.normals);
  ineq.insert(ineq.end(), hb.normals.begin(), hb.normals.end());

  std::vector<const std::vector<Int>*> shared;
  for (std::size_t id : a.ray_indices)
    if (std::find(b.ray_indices.begin(), b.ray_indices.end(), id) != b.ray_indices.end())
      shared.push_back(&fan.rays[id].point.scaled);

  std::vector<std::size_t> pick(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) pick[i] = i;
  std::vector<Int> rows((n - 1) * n), cand(n);
  while (true) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      std::copy_n(ineq.data() + pick[i] * n, n, rows.data() + i * n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      Int d = narrow(detail::minor_det(rows.data(), n - 1, n, n - 1, j));
      cand[j] = (j % 2) ? -d : d;
      nonzero |= d != 0;
    }
    if (nonzero) {
      for (int sign : {1, -1}) {
        bool feasible = true;
        for (std::size_t k = 0; k < m && feasible; ++k) feasible = sign * dot(ineq.data() + k * n, cand.data(), n) >= 0;
        if (!feasible) continue;
        for (Int& x : cand) x *= sign;
        bool known = std::any_of(shared.begin(), shared.end(),
                                 [&](const std::vector<Int>* g) { return positive_multiple(cand.data(), *g); });
        if (!known) return false;
        for (Int& x : cand) x *= sign;
      }
    }
    // Next (n-1)-subset of the m inequalities in lexicographic order.
    std::size_t i = n - 1;
    while (i > 0 && pick[i - 1] == m - (n - 1) + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j + 1 < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

FanValidation validate_impl(const Fan& f, std::size_t samples, std::uint64_t seed, bool parallel) {
  FanValidation rep;
  rep.samples = samples;
  rep.seed = seed;
  const GroupType& g = f.group;

  for (const FanCone& c : f.max_cones) {
    Int mult = cone_multiplicity(c.cone, g);
    if (mult != 1) {
      rep.smooth = false;
      rep.bad_multiplicities.push_back(mult);
    }
  }
  std::sort(rep.bad_multiplicities.begin(), rep.bad_multiplicities.end());
  rep.bad_multiplicities.erase(std::unique(rep.bad_multiplicities.begin(), rep.bad_multiplicities.end()),
                               rep.bad_multiplicities.end());

  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    const LatticePoint& p = f.rays[i].point;
    bool used = std::any_of(f.max_cones.begin(), f.max_cones.end(), [&](const FanCone& c) {
      return std::find(c.ray_indices.begin(), c.ray_indices.end(), i) != c.ray_indices.end();
    });
    if (!used) continue;  // e_i replaced by e_i/k when e_i is not primitive
    if (!lattice_contains(p, g) || primitive_in_lattice(p, g) != p) {
      rep.rays_primitive = false;
      rep.bad_rays.push_back(i);
    }
  }

  std::vector<Halfspaces> hs;
  hs.reserve(f.max_cones.size());
  for (const FanCone& c : f.max_cones) hs.push_back(halfspaces_of(c.cone));

  const std::vector<LatticePoint> points = sample_interior_points(g.dim(), samples, seed);
  std::vector<PointVerdict> verdicts(points.size());
  const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) verdicts[i] = classify(hs, points[i]);
  for (const PointVerdict& v : verdicts) {
    if (!v.covered) ++rep.uncovered;
    if (v.overlap) ++rep.overlapping;
  }
  rep.coverage = rep.uncovered == 0 && rep.overlapping == 0;

  const std::size_t cones = f.max_cones.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < cones; ++i)
    for (std::size_t j = i + 1; j < cones; ++j) pairs.emplace_back(i, j);
  std::vector<char> pair_ok(pairs.size(), 1);
  const auto npairs = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (std::ptrdiff_t k = 0; k < npairs; ++k) {
    auto [i, j] = pairs[k];
    pair_ok[k] = faces_compatible(f.max_cones[i], hs[i], f.max_cones[j], hs[j], f);
  }
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (!pair_ok[k]) {
      rep.faces = false;
      rep.bad_pairs.push_back(pairs[k]);
    }
  return rep;
}

}  // namespace

std::vector<LatticePoint> sample_interior_points(std::size_t dim, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LatticePoint> out(samples, LatticePoint{std::vector<Int>(dim)});
  for (auto& p : out)
    for (Int& x : p.scaled) x = 1 + static_cast<Int>(rng() >> 44);
  return out;
}

FanValidation validate_fan(const Fan& f, std::size_t samples, std::uint64_t seed) {
  return validate_impl(f, samples, seed, true);
}

FanValidation validate_fan_serial(const Fan& f, std::size_t samples, std::uint64_t seed) {
  return validate_impl(f, samples, seed, false);
}

std::string FanValidation::summary() const {
  std::ostringstream os;
  os << "smooth: " << (smooth ? "pass" : "FAIL");
  if (!smooth) {
    os << " (multiplicities";
    for (Int m : bad_multiplicities) os << " " << m;
    os << ")";
  }
  os << "\nrays primitive in N_G: " << (rays_primitive ? "pass" : "FAIL");
  os << "\ncoverage (" << samples << " samples, seed " << seed << "): " << (coverage ? "pass" : "FAIL");
  if (!coverage) os << " (uncovered " << uncovered << ", overlapping " << overlapping << ")";
  os << "\nface compatibility: " << (faces ? "pass" : "FAIL");
  if (!faces) os << " (" << bad_pairs.size() << " bad pairs)";
  os << "\n";
  return os.str();
}

}  // namespace fores
