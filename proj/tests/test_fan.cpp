#include <doctest.h>

#include <algorithm>
#include <regex>
#include <set>

#include <json.hpp>

#include "fores/fan.hpp"
#include "fores/fan_io.hpp"

using namespace fores;

namespace {

ProperFraction pf(std::vector<Int> a, Int r) { return ProperFraction(std::move(a), r); }
GroupType grp(std::vector<Int> a, Int r) { return GroupType(pf(std::move(a), r)); }
LatticePoint pt(std::vector<Int> s) { return LatticePoint{std::move(s)}; }

const GroupType kG = grp({1, 2, 7}, 12);
const LatticePoint kE1 = pt({12, 0, 0}), kE2 = pt({0, 12, 0}), kE3 = pt({0, 0, 12});
const LatticePoint kV1 = pt({1, 2, 7});

std::set<LatticePoint> exceptional_set(const Fan& f) {
  auto rays = f.exceptional_rays();
  return {rays.begin(), rays.end()};
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                std::sregex_iterator()));
}

template <class Fn>
void for_each_group(std::size_t n, Int r_max, Fn fn) {
  for (Int r = 2; r <= r_max; ++r) {
    std::vector<Int> a(n, 0);
    while (true) {
      ProperFraction f(a, r);
      if (is_semi_unimodular(f)) fn(GroupType(f));
      std::size_t i = n;
      while (i > 0 && a[i - 1] == r - 1) a[--i] = 0;
      if (i == 0) break;
      ++a[i - 1];
    }
  }
}

}  // namespace

TEST_CASE("cone multiplicity") {
  CHECK(cone_multiplicity(root_cone(kG), kG) == 12);
  CHECK(cone_multiplicity(Cone{{kE1, kE2, kV1}, pf({1, 2, 2}, 7), {3}}, kG) == 7);
  CHECK(cone_multiplicity(Cone{{kV1, kE2, kE3}, pf({0, 0, 0}, 1), {1}}, kG) == 1);

  Cone off_lattice{{pt({1, 0, 0}), pt({0, 1, 0}), kE3}, pf({0, 0, 0}, 1), {}};
  CHECK_THROWS_AS(cone_multiplicity(off_lattice, kG), std::domain_error);
  Cone flat{{kE1, kE2, pt({12, 12, 0})}, pf({0, 0, 0}, 1), {}};
  CHECK_THROWS_AS(cone_multiplicity(flat, kG), std::invalid_argument);
}

TEST_CASE("star subdivision of the root cone") {
  StarSubdivision s = star_subdivide(root_cone(kG), kG);
  CHECK(s.new_ray == kV1);
  REQUIRE(s.children.size() == 3);
  CHECK(s.children[0].local_type == pf({0, 0, 0}, 1));
  CHECK(s.children[1].local_type == pf({1, 0, 1}, 2));
  CHECK(s.children[2].local_type == pf({1, 2, 2}, 7));
  CHECK(s.children[2].generators == std::vector<LatticePoint>{kE1, kE2, kV1});
  CHECK(s.children[1].word == Word{2});
}

TEST_CASE("star subdivision of the intermediate cones") {
  StarSubdivision s2 = star_subdivide(Cone{{kE1, kV1, kE3}, pf({1, 0, 1}, 2), {2}}, kG);
  CHECK(s2.new_ray == pt({6, 0, 6}));
  REQUIRE(s2.children.size() == 2);
  CHECK(s2.children[0].word == Word{2, 1});
  CHECK(s2.children[1].word == Word{2, 3});

  StarSubdivision s3 = star_subdivide(Cone{{kE1, kE2, kV1}, pf({1, 2, 2}, 7), {3}}, kG);
  CHECK(s3.new_ray == pt({2, 4, 2}));

  CHECK_THROWS_AS(star_subdivide(Cone{{kV1, kE2, kE3}, pf({0, 0, 0}, 1), {1}}, kG), std::invalid_argument);
  // a local type that does not match the generators leaves N_G
  CHECK_THROWS_AS(star_subdivide(Cone{{kE1, kE2, kE3}, pf({1, 1, 1}, 2), {}}, kG), std::domain_error);
}

TEST_CASE("resolution of 1/12(1,2,7)") {
  Fan fan = build_resolution(kG);
  CHECK(euler_characteristic(fan) == 8);
  for (const FanCone& c : fan.max_cones) CHECK(c.multiplicity == 1);
  CHECK(exceptional_set(fan) == std::set<LatticePoint>{kV1, pt({2, 4, 2}), pt({6, 0, 6}), pt({7, 2, 1})});
  CHECK(fan.rays.size() == 7);

  // The two singular children of the (1,2,2)/7 cone carry {(1,1,0)/2, (1,0,1)/2}.
  std::multiset<ProperFraction> depth2;
  for (const TreeNode& t : fan.tree)
    if (t.word.size() == 2 && t.word[0] == 3 && t.new_ray) depth2.insert(t.local_type);
  CHECK(depth2 == std::multiset<ProperFraction>{pf({1, 1, 0}, 2), pf({1, 0, 1}, 2)});

  // both are subdivided at (7,2,1)/12, which lies on their shared face
  std::set<std::size_t> new_rays;
  for (const TreeNode& t : fan.tree)
    if (t.word.size() == 2 && t.word[0] == 3 && t.new_ray) new_rays.insert(*t.new_ray);
  REQUIRE(new_rays.size() == 1);
  CHECK(fan.rays[*new_rays.begin()].point == pt({7, 2, 1}));
}

TEST_CASE("small resolutions") {
  Fan a = build_resolution(grp({1, 1, 1}, 3));
  CHECK(euler_characteristic(a) == 3);
  CHECK(exceptional_set(a) == std::set<LatticePoint>{pt({1, 1, 1})});

  Fan b = build_resolution(grp({1, 2}, 5));
  CHECK(euler_characteristic(b) == 3);
  CHECK(exceptional_set(b) == std::set<LatticePoint>{pt({1, 2}), pt({3, 1})});

  Fan root_only = build_resolution(kG, 0);
  CHECK(euler_characteristic(root_only) == 1);
}

TEST_CASE("discrepancy") {
  CHECK(discrepancy(pt({6, 0, 6}), kG) == Rational(0));
  CHECK(discrepancy(kV1, kG) == Rational(-1, 6));
  CHECK(discrepancy(pt({2, 4, 2}), kG) == Rational(-1, 3));
  CHECK(discrepancy(pt({2, 4, 14}), kG) == Rational(-1, 6));  // via the primitive element
  CHECK_THROWS_AS(discrepancy(pt({1, 0, 0}), kG), std::invalid_argument);
  CHECK_FALSE(crepant_by_fan(build_resolution(kG)));
  CHECK(crepant_by_fan(build_resolution(grp({1, 1, 1}, 3))));
}

TEST_CASE("fan invariants over all small types") {
  auto check = [](const GroupType& g) {
    Fan fan = build_resolution(g);
    CHECK(euler_characteristic(fan) == size(expand(g.fraction())));
    for (const FanCone& c : fan.max_cones) CHECK(c.multiplicity == 1);

    for (const TreeNode& t : fan.tree) {
      std::vector<LatticePoint> gens;
      for (std::size_t id : t.ray_indices) gens.push_back(fan.rays[id].point);
      const Int mult = cone_multiplicity(Cone{gens, t.local_type, t.word}, g);
      CHECK(mult == t.local_type.denominator());
      for (std::size_t child : t.children) {
        const TreeNode& c = fan.tree[child];
        CHECK(c.local_type.denominator() == t.local_type.numerator(c.word.back() - 1));
      }
    }
    for (const Ray& r : fan.rays)
      if (r.exceptional) {
        CHECK(r.discrepancy > Rational(-1));
        CHECK(r.discrepancy == r.age - Rational(1));
      }
  };
  for_each_group(2, 30, check);
  for_each_group(3, 16, check);
  for_each_group(4, 7, check);
}

TEST_CASE("validate_fan on the golden resolution") {
  Fan fan = build_resolution(kG);
  FanValidation v = validate_fan(fan, 1000, kDefaultSeed);
  CHECK(v.smooth);
  CHECK(v.rays_primitive);
  CHECK(v.coverage);
  CHECK(v.faces);
  CHECK(v.ok());

  FanValidation serial = validate_fan_serial(fan, 1000, kDefaultSeed);
  CHECK(serial.uncovered == v.uncovered);
  CHECK(serial.overlapping == v.overlapping);
  CHECK(serial.bad_pairs == v.bad_pairs);
}

TEST_CASE("validate_fan detects a missing cone") {
  Fan fan = build_resolution(kG);
  // the smooth cone next to e_1 (word 1) covers a large share of the triangle
  auto it = std::find_if(fan.max_cones.begin(), fan.max_cones.end(),
                         [](const FanCone& c) { return c.cone.word == Word{1}; });
  REQUIRE(it != fan.max_cones.end());
  fan.max_cones.erase(it);
  FanValidation v = validate_fan(fan, 1000, kDefaultSeed);
  CHECK_FALSE(v.coverage);
  CHECK(v.uncovered > 0);
  CHECK(v.faces);
}

TEST_CASE("validate_fan reports multiplicities of a partial subdivision") {
  Fan fan = build_resolution(kG, 1);
  CHECK(euler_characteristic(fan) == 3);
  FanValidation v = validate_fan(fan, 1000, kDefaultSeed);
  CHECK_FALSE(v.smooth);
  CHECK(v.bad_multiplicities == std::vector<Int>{2, 7});
  CHECK(v.coverage);
  CHECK(v.faces);
}

TEST_CASE("validate_fan detects a hanging vertex") {
  // Cone(e1,e2,e3) against two cones splitting the facet e1e2 from below:
  // the midpoint e1+e2 is not a ray of the upper cone.
  GroupType g = grp({1, 1, 1}, 2);
  LatticePoint e1 = pt({2, 0, 0}), e2 = pt({0, 2, 0}), e3 = pt({0, 0, 2}), down = pt({0, 0, -2}), mid = pt({2, 2, 0});
  Fan fan{g, {}, {}, {}};
  for (const auto& p : {e1, e2, e3, down, mid}) fan.rays.push_back(Ray{p, false, Rational(1), Rational(0)});
  auto add = [&](std::vector<std::size_t> ids) {
    std::vector<LatticePoint> gens;
    for (std::size_t i : ids) gens.push_back(fan.rays[i].point);
    fan.max_cones.push_back(FanCone{Cone{gens, pf({0, 0, 0}, 1), {}}, ids, 1});
  };
  add({0, 1, 2});
  add({0, 4, 3});
  add({4, 1, 3});
  FanValidation v = validate_fan(fan, 10, kDefaultSeed);
  CHECK_FALSE(v.faces);
  CHECK(v.bad_pairs.size() == 2);

  // overlapping cones fail both coverage uniqueness and face compatibility
  Fan overlap{g, fan.rays, {}, {}};
  overlap.max_cones.push_back(fan.max_cones[0]);
  overlap.max_cones.push_back(FanCone{Cone{{e1, e2, pt({2, 2, 2})}, pf({0, 0, 0}, 1), {}}, {0, 1, 5}, 1});
  overlap.rays.push_back(Ray{pt({2, 2, 2}), false, Rational(1), Rational(0)});
  FanValidation w = validate_fan(overlap, 2000, kDefaultSeed);
  CHECK_FALSE(w.faces);
  CHECK(w.overlapping > 0);
}

TEST_CASE("sample stream is reproducible and strictly interior") {
  auto a = sample_interior_points(3, 50, 99);
  auto b = sample_interior_points(3, 50, 99);
  CHECK(a == b);
  CHECK(a != sample_interior_points(3, 50, 100));
  for (const auto& p : a)
    for (Int x : p.scaled) {
      CHECK(x >= 1);
      CHECK(x <= (Int{1} << 20));
    }
}

TEST_CASE("JSON export follows the fan schema") {
  Fan fan = build_resolution(kG);
  std::string text = fan_to_json(fan, expand(kG.fraction()));
  CHECK(text == fan_to_json(build_resolution(kG), expand(kG.fraction())));

  auto j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"group", "rays", "max_cones", "euler", "height_total", "size", "crepant"});
  CHECK(j["group"]["r"] == 12);
  CHECK(j["group"]["weights"] == nlohmann::json({1, 2, 7}));
  CHECK(j["euler"] == 8);
  CHECK(j["height_total"] == -4);
  CHECK(j["size"] == 8);
  CHECK(j["crepant"] == false);
  REQUIRE(j["rays"].size() == 7);
  CHECK(j["rays"][3]["scaled"] == nlohmann::json({1, 2, 7}));
  CHECK(j["rays"][3]["exceptional"] == true);
  CHECK(j["rays"][3]["age"] == "5/6");
  CHECK(j["rays"][3]["discrepancy"] == "-1/6");
  CHECK(j["rays"][0]["exceptional"] == false);
  REQUIRE(j["max_cones"].size() == 8);
  for (const auto& c : j["max_cones"]) {
    CHECK(c["ray_indices"].size() == 3);
    CHECK(c["multiplicity"] == 1);
  }
  CHECK(j["max_cones"][0]["word"] == nlohmann::json({1}));
}

TEST_CASE("SVG and DOT exports") {
  Fan fan = build_resolution(kG);
  std::string svg = fan_to_svg(fan);
  CHECK(count_matches(svg, "<circle class=\"ray\"") == 7);
  CHECK(count_matches(svg, "<polygon class=\"cone\"") == 8);
  CHECK(svg == fan_to_svg(build_resolution(kG)));
  CHECK_THROWS_AS(fan_to_svg(build_resolution(grp({1, 2}, 5))), std::invalid_argument);

  std::string dot = fan_to_dot(fan);
  CHECK(count_matches(dot, "\\[label=") == fan.tree.size());
  CHECK(count_matches(dot, "->") == fan.tree.size() - 1);
  CHECK(dot.find("(1,2,2)/7") != std::string::npos);
}
