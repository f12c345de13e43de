#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fores/lattice.hpp"
#include "fores/remainder_polynomial.hpp"

namespace fores {

/// Simplicial n-dimensional cone. `local_type` is the singularity type
/// relative to the ordered generator basis; `word` is its path from the root.
struct Cone {
  std::vector<LatticePoint> generators;
  ProperFraction local_type;
  Word word;
};

/// Cone(e_1,...,e_n) carrying the group type itself.
Cone root_cone(const GroupType& g);

/// |det(scaled generators)| / r^(n-1), the index of the generators' span in
/// N_G. Throws std::domain_error if the determinant is not divisible by
/// r^(n-1) and std::invalid_argument for dependent generators.
Int cone_multiplicity(const Cone& c, const GroupType& g);

struct StarSubdivision {
  LatticePoint new_ray;
  std::vector<Cone> children;  // one per nonzero local numerator, index order
};

/// Star subdivision at (sum_k b_k g_k)/s where b/s is the local type.
/// Child k replaces generator k by the new ray and has local type R_k(b/s).
/// Indices with b_k = 0 give degenerate cones and are omitted.
StarSubdivision star_subdivide(const Cone& c, const GroupType& g);

struct Ray {
  LatticePoint point;
  bool exceptional = false;  // introduced by a subdivision, not an e_i
  Rational age;
  Rational discrepancy;
};

struct FanCone {
  Cone cone;
  std::vector<std::size_t> ray_indices;
  Int multiplicity = 0;
};

/// Node of the subdivision tree; leaves are the maximal cones.
struct TreeNode {
  Word word;
  ProperFraction local_type;
  std::vector<std::size_t> ray_indices;
  std::optional<std::size_t> new_ray;  // set when the node was subdivided
  std::vector<std::size_t> children;   // tree node indices
};

struct Fan {
  GroupType group;
  std::vector<Ray> rays;  // e_1..e_n first, then new rays in creation order
  std::vector<FanCone> max_cones;
  std::vector<TreeNode> tree;  // tree[0] is the root cone

  /// Rays of the form scaled == p.scaled, if present.
  std::optional<std::size_t> find_ray(const LatticePoint& p) const;
  std::vector<LatticePoint> exceptional_rays() const;
};

/// Fujiki-Oka fan: star-subdivide every cone whose local type has denominator
/// >= 2, depth first in child-index order. `max_depth` stops early and is only
/// meant for inspecting intermediate stages.
Fan build_resolution(const GroupType& g, std::optional<std::size_t> max_depth = std::nullopt);

/// Number of maximal cones.
Int euler_characteristic(const Fan& f);

/// height(primitive(ray)) / r. Throws std::invalid_argument if ray is not in N_G.
Rational discrepancy(const LatticePoint& ray, const GroupType& g);

/// Every subdivision ray has discrepancy 0.
bool crepant_by_fan(const Fan& f);

struct FanValidation {
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  bool smooth = true;
  std::vector<Int> bad_multiplicities;  // sorted, distinct

  bool rays_primitive = true;
  std::vector<std::size_t> bad_rays;

  bool coverage = true;
  std::size_t uncovered = 0;
  std::size_t overlapping = 0;  // interior point of one cone inside another

  bool faces = true;
  std::vector<std::pair<std::size_t, std::size_t>> bad_pairs;

  bool ok() const { return smooth && rays_primitive && coverage && faces; }
  std::string summary() const;
};

/// Default seed used by the CLI and tests.
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Checks smoothness, primitivity, coverage/disjointness on `samples` seeded
/// interior points of Cone(e_1..e_n), and pairwise face compatibility. The
/// point stream is generated sequentially from `seed`; membership checks run
/// in parallel with OpenMP. Results do not depend on the thread count.
FanValidation validate_fan(const Fan& f, std::size_t samples, std::uint64_t seed);

/// Single-threaded reference for validate_fan.
FanValidation validate_fan_serial(const Fan& f, std::size_t samples, std::uint64_t seed);

/// Seeded sample stream used by validate_fan: scaled coordinates in [1, 2^20].
std::vector<LatticePoint> sample_interior_points(std::size_t dim, std::size_t samples, std::uint64_t seed);

struct ResolutionReport {
  Int euler = 0;
  Int total_height = 0;
  Int size = 0;
  bool crepant = false;
  std::vector<std::pair<LatticePoint, Rational>> discrepancies;  // one per ray
  FanValidation validation;
};

ResolutionReport make_report(const Fan& f, const RemainderPolynomial& p, FanValidation validation);

}  // namespace fores
