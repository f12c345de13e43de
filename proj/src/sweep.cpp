#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "fores/verify.hpp"

namespace fores {

bool SweepRecord::passed() const {
  return error.empty() && smooth_all && id_size_eq_height_plus_r && id_euler_eq_size &&
         id_euler_eq_height_plus_r && crepant_by_ages == crepant_by_fan && fan_valid.value_or(true) &&
         matches_hj.value_or(true);
}

// Timing is excluded so that repeated sweeps compare equal.
bool operator==(const SweepRecord& a, const SweepRecord& b) {
  return a.weights == b.weights && a.order == b.order && a.size == b.size && a.height == b.height &&
         a.euler == b.euler && a.smooth_all == b.smooth_all && a.crepant_by_ages == b.crepant_by_ages &&
         a.crepant_by_fan == b.crepant_by_fan && a.id_size_eq_height_plus_r == b.id_size_eq_height_plus_r &&
         a.id_euler_eq_size == b.id_euler_eq_size && a.id_euler_eq_height_plus_r == b.id_euler_eq_height_plus_r &&
         a.fan_valid == b.fan_valid && a.matches_hj == b.matches_hj && a.error == b.error;
}

SweepRecord evaluate(const GroupType& g, std::size_t validate_samples, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.weights = g.weights();
  rec.order = g.order();
  try {
    RemainderPolynomial p = expand(g.fraction());
    Fan fan = build_resolution(g);
    rec.size = size(p);
    rec.height = total_height(p);
    rec.euler = euler_characteristic(fan);
    rec.smooth_all = true;
    for (const FanCone& c : fan.max_cones)
      if (c.multiplicity != 1) rec.smooth_all = false;
    rec.crepant_by_ages = true;
    for (const Term& t : p.terms())
      if (!(age(t.coefficient) == Rational(1))) rec.crepant_by_ages = false;
    rec.crepant_by_fan = crepant_by_fan(fan);
    rec.id_size_eq_height_plus_r = rec.size == rec.height + rec.order;
    rec.id_euler_eq_size = rec.euler == rec.size;
    rec.id_euler_eq_height_plus_r = rec.euler == rec.height + rec.order;
    if (validate_samples > 0) rec.fan_valid = validate_fan_serial(fan, validate_samples, seed).ok();
    if (g.dim() == 2) {
      Compare2D cmp = compare_2d(g);
      if (cmp.applicable) rec.matches_hj = cmp.ok;
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<ProperFraction> enumerate_types(const SweepSpec& spec) {
  if (spec.dim < 2) throw std::invalid_argument("sweep dimension must be >= 2");
  if (spec.r_min < 2 || spec.r_max < spec.r_min) throw std::invalid_argument("sweep needs 2 <= r_min <= r_max");

  std::uint64_t candidates = 0;
  for (Int r = spec.r_min; r <= spec.r_max; ++r) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < spec.dim; ++i) c *= static_cast<std::uint64_t>(r);
    candidates += c;
    if (candidates > spec.soft_cap)
      throw std::length_error("sweep exceeds the soft cap of " + std::to_string(spec.soft_cap) +
                              " candidate tuples; raise the cap to proceed");
  }

  std::vector<ProperFraction> out;
  for (Int r = spec.r_min; r <= spec.r_max; ++r) {
    std::vector<Int> a(spec.dim, 0);
    while (true) {
      bool has_one = false;
      Int sum = 0;
      for (Int x : a) {
        has_one |= x == 1;
        sum += x;
      }
      bool keep = has_one && (spec.filter != SweepFilter::GorensteinOnly || sum % r == 0);
      if (keep) out.emplace_back(a, r);

      std::size_t i = spec.dim;
      while (i > 0 && a[i - 1] == r - 1) a[--i] = 0;
      if (i == 0) break;
      ++a[i - 1];
    }
  }
  return out;
}

namespace {

std::vector<SweepRecord> finish(std::vector<SweepRecord> records, const SweepSpec& spec) {
  if (spec.filter != SweepFilter::CrepantOnly) return records;
  std::vector<SweepRecord> kept;
  for (auto& r : records)
    if (r.crepant_by_ages && r.crepant_by_fan) kept.push_back(std::move(r));
  return kept;
}

}  // namespace

std::vector<SweepRecord> sweep(const SweepSpec& spec) {
  std::vector<ProperFraction> types = enumerate_types(spec);
  std::vector<SweepRecord> records(types.size());
  const auto count = static_cast<std::ptrdiff_t>(types.size());
  const int threads = spec.jobs > 0 ? spec.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    records[i] = evaluate(GroupType(types[i]), spec.validate_samples, spec.seed);
  return finish(std::move(records), spec);
}

std::vector<SweepRecord> sweep_serial(const SweepSpec& spec) {
  std::vector<SweepRecord> records;
  for (const ProperFraction& t : enumerate_types(spec))
    records.push_back(evaluate(GroupType(t), spec.validate_samples, spec.seed));
  return finish(std::move(records), spec);
}

bool all_passed(const std::vector<SweepRecord>& records) {
  for (const auto& r : records)
    if (!r.passed()) return false;
  return true;
}

std::string sweep_csv(const std::vector<SweepRecord>& records, bool with_timing) {
  std::ostringstream os;
  os << "r,weights,S,h,chi,smooth_all,crepant,id_S_eq_h_plus_r,id_chi_eq_S,id_chi_eq_h_plus_r,ms\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& r : records) {
    os << r.order << ",\"";
    for (std::size_t i = 0; i < r.weights.size(); ++i) os << (i ? "," : "") << r.weights[i];
    os << "\"," << r.size << "," << r.height << "," << r.euler << "," << b(r.smooth_all) << ","
       << b(r.crepant_by_fan) << "," << b(r.id_size_eq_height_plus_r) << "," << b(r.id_euler_eq_size) << ","
       << b(r.id_euler_eq_height_plus_r) << ",";
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.ms);
      os << buf;
    } else {
      os << "-";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace fores
