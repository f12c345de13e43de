// Command-line front end: resolve, expand, verify, sweep, family, export.
// Exit status: 0 success, 1 verification failure, 2 invalid input.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fores/fan_io.hpp"
#include "fores/verify.hpp"

namespace {

using namespace fores;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupType parse_group(Int r, const std::string& weights) {
  std::vector<Int> w;
  std::stringstream ss(weights);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      Int v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      w.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInput("malformed weight '" + tok + "' in --weights");
    }
  }
  if (w.size() < 2) throw InvalidInput("--weights needs at least two entries");
  if (r < 2) throw InvalidInput("--r must be >= 2");
  try {
    return GroupType(ProperFraction(std::move(w), r));
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_rays(std::ostream& os, const Fan& fan) {
  os << "rays (scaled by r):\n";
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const Ray& r = fan.rays[i];
    std::string coords = "(";
    for (std::size_t k = 0; k < r.point.scaled.size(); ++k)
      coords += (k ? "," : "") + std::to_string(r.point.scaled[k]);
    coords += ")/" + std::to_string(fan.group.order());
    os << "  [" << i << "] " << std::left << std::setw(18) << coords << (r.exceptional ? "exceptional" : "axis       ")
       << "  age " << std::setw(6) << r.age.str() << "  discrepancy " << r.discrepancy.str() << "\n";
  }
}

// Prints the full report and returns whether every check passed.
bool report(std::ostream& os, const GroupType& g, const Fan& fan, const RemainderPolynomial& poly,
            const FanValidation& val) {
  ResolutionReport rep = make_report(fan, poly, val);
  os << "group " << g.str() << "\n";
  os << "remainder polynomial:\n" << poly.render_text();
  os << "chi = " << rep.euler << "  S = " << rep.size << "  h = " << rep.total_height << "  r = " << g.order()
     << "\n";
  const bool mckay = rep.euler == rep.total_height + g.order();
  const bool triangle = mckay && rep.euler == rep.size;
  os << "chi = h + r: " << yes_no(mckay) << "  chi = S: " << yes_no(rep.euler == rep.size) << "\n";
  CrepancyCheck crep = check_crepancy_equivalence(g);
  os << "crepant: " << yes_no(rep.crepant) << " (ages: " << yes_no(crep.by_ages) << ")\n";
  print_rays(os, fan);
  os << val.summary();
  return triangle && crep.equivalent && val.ok();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fujiki-Oka toric resolutions of cyclic quotient singularities"};
  app.require_subcommand(1);

  Int r = 0;
  std::string weights;
  std::size_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--r", r, "group order r")->required();
    sub->add_option("--weights", weights, "comma-separated weights a1,...,an")->required();
  };

  std::string json_path, svg_path, dot_path;
  auto* resolve = app.add_subcommand("resolve", "build the resolution fan and report chi, S, h, crepancy");
  add_group(resolve);
  resolve->add_option("--json", json_path, "write the fan as JSON");
  resolve->add_option("--svg", svg_path, "write the cross-section SVG (n = 3)");
  resolve->add_option("--dot", dot_path, "write the subdivision tree as DOT");
  resolve->add_option("--samples", samples, "coverage sample points");
  resolve->add_option("--seed", seed, "sampling seed");

  auto* expand_cmd = app.add_subcommand("expand", "print the remainder polynomial");
  add_group(expand_cmd);
  expand_cmd->add_option("--json", json_path, "write the terms as JSON");

  auto* verify = app.add_subcommand("verify", "run every identity check for one group");
  add_group(verify);
  verify->add_option("--samples", samples, "coverage sample points");
  verify->add_option("--seed", seed, "sampling seed");

  SweepSpec spec;
  std::string csv_path;
  bool crepant_only = false, gorenstein_only = false, timing = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive check over all semi-unimodular types");
  sweep_cmd->add_option("--dim", spec.dim, "dimension n")->required();
  sweep_cmd->add_option("--r-min", spec.r_min, "smallest r");
  sweep_cmd->add_option("--r-max", spec.r_max, "largest r")->required();
  sweep_cmd->add_flag("--crepant-only", crepant_only, "keep only crepant records");
  sweep_cmd->add_flag("--gorenstein-only", gorenstein_only, "only types with sum(a) = 0 mod r");
  sweep_cmd->add_option("--csv", csv_path, "write records as CSV");
  sweep_cmd->add_option("--jobs", spec.jobs, "worker threads (0 = OpenMP default)");
  sweep_cmd->add_flag("--timing", timing, "fill the ms column of the CSV");
  sweep_cmd->add_option("--validate", spec.validate_samples, "also run validate_fan with this many samples");
  sweep_cmd->add_option("--seed", spec.seed, "sampling seed for --validate");
  sweep_cmd->add_option("--cap", spec.soft_cap, "soft cap on candidate tuples");

  std::string family_name = "plus";
  Int k_min = 1, k_max = 15;
  auto* family = app.add_subcommand("family", "check chi = r on 1/(6k+1)(1,3,6k-5) or 1/(6k-1)(1,3,3k-2)");
  family->add_option("--name", family_name, "plus | minus | both")->check(CLI::IsMember({"plus", "minus", "both"}));
  family->add_option("--k-min", k_min, "first k");
  family->add_option("--k-max", k_max, "last k");

  std::string format, out_path;
  auto* export_cmd = app.add_subcommand("export", "write one artifact");
  add_group(export_cmd);
  export_cmd->add_option("--format", format, "json | svg | dot")->required()->check(CLI::IsMember({"json", "svg", "dot"}));
  export_cmd->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*resolve) {
      GroupType g = parse_group(r, weights);
      if (!svg_path.empty() && g.dim() != 3) throw InvalidInput("--svg is only available for n = 3");
      Fan fan = build_resolution(g);
      RemainderPolynomial poly = expand(g.fraction());
      FanValidation val = validate_fan(fan, samples, seed);
      bool ok = report(std::cout, g, fan, poly, val);
      if (!json_path.empty()) write_file(json_path, fan_to_json(fan, poly));
      if (!svg_path.empty()) write_file(svg_path, fan_to_svg(fan));
      if (!dot_path.empty()) write_file(dot_path, fan_to_dot(fan));
      return ok ? 0 : 1;
    }

    if (*expand_cmd) {
      GroupType g = parse_group(r, weights);
      RemainderPolynomial poly = expand(g.fraction());
      std::cout << "R*(" << g.fraction().str() << ") =\n" << poly.render_text();
      std::cout << "terms = " << poly.term_count() << "  S = " << size(poly) << "  h = " << total_height(poly)
                << "\n";
      if (!json_path.empty()) write_file(json_path, poly.render_json() + "\n");
      return 0;
    }

    if (*verify) {
      GroupType g = parse_group(r, weights);
      SizeHeightCheck sh = check_size_height_identity(g.fraction());
      WeakMcKayCheck mk = check_weak_mckay(g);
      CrepancyCheck cr = check_crepancy_equivalence(g);
      FanValidation val = validate_fan(build_resolution(g), samples, seed);
      bool ok = sh.holds && mk.triangle && cr.equivalent && val.ok();
      std::cout << "group " << g.str() << "\n"
                << "S = h + r:        " << yes_no(sh.holds) << " (" << sh.size << " = " << sh.height << " + "
                << sh.order << ")\n"
                << "chi = S = h + r:  " << yes_no(mk.triangle) << " (chi = " << mk.euler << ")\n"
                << "crepancy by ages <=> by fan: " << yes_no(cr.equivalent) << " (crepant: " << yes_no(cr.by_fan)
                << ")\n";
      if (g.dim() == 2) {
        Compare2D cmp = compare_2d(g);
        if (!cmp.expansion.entries.empty()) {
          std::cout << "Hirzebruch-Jung [";
          for (std::size_t i = 0; i < cmp.expansion.entries.size(); ++i)
            std::cout << (i ? "," : "") << cmp.expansion.entries[i];
          std::cout << "] matches fan: " << yes_no(cmp.ok) << "\n";
          ok = ok && cmp.ok;
        }
      }
      std::cout << val.summary();
      return ok ? 0 : 1;
    }

    if (*sweep_cmd) {
      if (crepant_only && gorenstein_only) throw InvalidInput("choose at most one of --crepant-only, --gorenstein-only");
      spec.filter = crepant_only ? SweepFilter::CrepantOnly
                                 : (gorenstein_only ? SweepFilter::GorensteinOnly : SweepFilter::None);
      std::vector<SweepRecord> records;
      try {
        records = sweep(spec);
      } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
      } catch (const std::length_error& e) {
        throw InvalidInput(e.what());
      }
      std::size_t failed = 0;
      for (const auto& rec : records)
        if (!rec.passed()) {
          ++failed;
          std::cerr << "FAILED " << GroupType(ProperFraction(rec.weights, rec.order)).str()
                    << (rec.error.empty() ? "" : ": " + rec.error) << "\n";
        }
      std::cout << "sweep n = " << spec.dim << ", r in [" << spec.r_min << ", " << spec.r_max << "]: "
                << records.size() << " types, " << failed << " failed\n";
      if (!csv_path.empty()) write_file(csv_path, sweep_csv(records, timing));
      return failed == 0 ? 0 : 1;
    }

    if (*family) {
      if (k_min < 1 || k_max < k_min) throw InvalidInput("need 1 <= k-min <= k-max");
      std::vector<Family> which;
      if (family_name != "minus") which.push_back(Family::Plus);
      if (family_name != "plus") which.push_back(Family::Minus);
      bool ok = true;
      for (Family f : which)
        for (Int k = k_min; k <= k_max; ++k) {
          GroupType g = family_type(f, k);
          WeakMcKayCheck mk = check_weak_mckay(g);
          bool pass = mk.triangle && mk.euler == g.order();
          ok = ok && pass;
          std::cout << (f == Family::Plus ? "plus " : "minus") << " k=" << std::setw(2) << k << "  "
                    << std::setw(18) << g.str() << " chi = " << mk.euler << "  h = " << mk.height
                    << "  crepant: " << yes_no(check_crepancy_equivalence(g).by_fan)
                    << "  chi = r: " << yes_no(pass) << "\n";
        }
      return ok ? 0 : 1;
    }

    if (*export_cmd) {
      GroupType g = parse_group(r, weights);
      Fan fan = build_resolution(g);
      if (format == "json") write_file(out_path, fan_to_json(fan, expand(g.fraction())));
      if (format == "svg") {
        if (g.dim() != 3) throw InvalidInput("SVG export is only available for n = 3");
        write_file(out_path, fan_to_svg(fan));
      }
      if (format == "dot") write_file(out_path, fan_to_dot(fan));
      return 0;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
