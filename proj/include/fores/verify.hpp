#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fores/fan.hpp"

namespace fores {

struct SizeHeightCheck {
  bool holds = false;
  Int size = 0;
  Int height = 0;
  Int order = 0;
};

/// S(R*(v)) == h(R*(v)) + r, computed from the polynomial alone.
SizeHeightCheck check_size_height_identity(const ProperFraction& v);

struct WeakMcKayCheck {
  bool holds = false;     // chi == h + r
  bool triangle = false;  // chi == S == h + r
  Int euler = 0;
  Int size = 0;
  Int height = 0;
  Int order = 0;
};

/// Euler number by counting maximal cones of the fan, compared against the
/// polynomial statistics.
WeakMcKayCheck check_weak_mckay(const GroupType& g);

struct CrepancyCheck {
  bool equivalent = false;
  bool by_ages = false;  // every coefficient of R* has age 1
  bool by_fan = false;   // every subdivision ray has discrepancy 0
};

CrepancyCheck check_crepancy_equivalence(const GroupType& g);

/// Hirzebruch-Jung continued fraction r/a = c_1 - 1/(c_2 - 1/(...)), c_i >= 2.
struct HJExpansion {
  std::vector<Int> entries;

  /// Evaluates the expansion back to a reduced fraction.
  Rational evaluate() const;
};

/// Requires 0 < a < r and gcd(a, r) == 1; throws std::invalid_argument otherwise.
HJExpansion hj_expansion(Int r, Int a);

struct Compare2D {
  bool applicable = false;  // n = 2 with a weight coprime to r
  bool ok = false;
  std::size_t exceptional_rays = 0;
  Int euler = 0;
  HJExpansion expansion;
  bool rays_on_hull = false;
  std::string detail;
};

/// Lattice points of N_G on the compact boundary of conv((N_G ∩ σ_0) \ {0})
/// for a 2-dimensional group, ordered from e_2 to e_1, endpoints included.
std::vector<LatticePoint> hull_boundary_2d(const GroupType& g);

/// Compares the fan of 1/r(1,a) (or 1/r(a,1)) with the Hirzebruch-Jung
/// resolution: ray count, chi = length + 1, rays on the lattice hull.
Compare2D compare_2d(const GroupType& g);

enum class SweepFilter { None, CrepantOnly, GorensteinOnly };

struct SweepSpec {
  std::size_t dim = 3;
  Int r_min = 2;
  Int r_max = 12;
  SweepFilter filter = SweepFilter::None;
  std::size_t validate_samples = 0;  // 0 skips validate_fan
  std::uint64_t seed = kDefaultSeed;
  int jobs = 0;                      // 0 lets OpenMP decide
  std::uint64_t soft_cap = 20'000'000;  // candidate tuples before refusing
};

struct SweepRecord {
  std::vector<Int> weights;
  Int order = 0;
  Int size = 0;
  Int height = 0;
  Int euler = 0;
  bool smooth_all = false;
  bool crepant_by_ages = false;
  bool crepant_by_fan = false;
  bool id_size_eq_height_plus_r = false;
  bool id_euler_eq_size = false;
  bool id_euler_eq_height_plus_r = false;
  std::optional<bool> fan_valid;   // when validate_samples > 0
  std::optional<bool> matches_hj;  // n = 2 with a coprime non-unit weight
  double ms = 0.0;
  std::string error;

  bool passed() const;
  friend bool operator==(const SweepRecord& a, const SweepRecord& b);
};

/// Evaluates one group type with every check the sweep runs.
SweepRecord evaluate(const GroupType& g, std::size_t validate_samples, std::uint64_t seed);

/// All semi-unimodular (a_1..a_n)/r with r_min <= r <= r_max, lexicographic
/// within each r; permutations are kept. Filters apply Gorenstein
/// (sum a_i = 0 mod r) before, crepant after evaluation.
std::vector<ProperFraction> enumerate_types(const SweepSpec& spec);

/// OpenMP-parallel sweep; records come back in enumeration order.
/// Throws std::length_error past spec.soft_cap candidates.
std::vector<SweepRecord> sweep(const SweepSpec& spec);

/// Single-threaded reference sweep.
std::vector<SweepRecord> sweep_serial(const SweepSpec& spec);

bool all_passed(const std::vector<SweepRecord>& records);

/// CSV with columns r, weights, S, h, chi, smooth_all, crepant,
/// id_S_eq_h_plus_r, id_chi_eq_S, id_chi_eq_h_plus_r, ms. The ms column is
/// "-" unless `with_timing`, which keeps the default output reproducible.
std::string sweep_csv(const std::vector<SweepRecord>& records, bool with_timing);

enum class Family { Plus, Minus };

/// plus: 1/(6k+1)(1,3,6k-5); minus: 1/(6k-1)(1,3,3k-2). Requires k >= 1.
GroupType family_type(Family family, Int k);

}  // namespace fores
