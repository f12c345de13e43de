#include "fores/fan_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fores {

std::string fan_to_json(const Fan& f, const RemainderPolynomial& p) {
  nlohmann::ordered_json j;
  j["group"]["r"] = f.group.order();
  j["group"]["weights"] = f.group.weights();

  j["rays"] = nlohmann::ordered_json::array();
  for (const Ray& r : f.rays) {
    nlohmann::ordered_json ray;
    ray["scaled"] = r.point.scaled;
    ray["exceptional"] = r.exceptional;
    ray["age"] = r.age.str();
    ray["discrepancy"] = r.discrepancy.str();
    j["rays"].push_back(std::move(ray));
  }

  j["max_cones"] = nlohmann::ordered_json::array();
  for (const FanCone& c : f.max_cones) {
    nlohmann::ordered_json cone;
    cone["ray_indices"] = c.ray_indices;
    cone["word"] = c.cone.word;
    cone["multiplicity"] = c.multiplicity;
    j["max_cones"].push_back(std::move(cone));
  }

  j["euler"] = euler_characteristic(f);
  j["height_total"] = total_height(p);
  j["size"] = size(p);
  j["crepant"] = crepant_by_fan(f);
  return j.dump(2) + "\n";
}

namespace {

struct Point2 {
  double x, y;
};

// Reference triangle: e_1 bottom left, e_2 bottom right, e_3 on top.
constexpr Point2 kCorners[3] = {{40.0, 440.0}, {520.0, 440.0}, {280.0, 24.3}};

Point2 project(const LatticePoint& p) {
  double total = 0;
  for (Int c : p.scaled) total += static_cast<double>(c);
  Point2 out{0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    double wgt = static_cast<double>(p.scaled[i]) / total;
    out.x += wgt * kCorners[i].x;
    out.y += wgt * kCorners[i].y;
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string word_label(const Word& w) {
  if (w.empty()) return "root";
  std::string s;
  for (std::size_t i : w) s += std::to_string(i);
  return s;
}

}  // namespace

std::string fan_to_svg(const Fan& f) {
  if (f.group.dim() != 3) throw std::invalid_argument("SVG export needs a 3-dimensional fan");
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" height=\"480\" viewBox=\"0 0 560 480\">\n";
  os << "<title>Toric resolution of " << f.group.str() << "</title>\n";

  os << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  for (const FanCone& c : f.max_cones) {
    os << "<polygon class=\"cone\" data-word=\"" << word_label(c.cone.word) << "\" points=\"";
    for (std::size_t k = 0; k < c.ray_indices.size(); ++k) {
      Point2 q = project(f.rays[c.ray_indices[k]].point);
      os << (k ? " " : "") << num(q.x) << "," << num(q.y);
    }
    os << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  std::size_t axis = 0, extra = 0;
  for (const Ray& r : f.rays) {
    Point2 q = project(r.point);
    std::string label = r.exceptional ? "v" + std::to_string(++extra) : "e" + std::to_string(++axis);
    os << "<circle class=\"ray\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"3\"/>\n";
    os << "<text x=\"" << num(q.x + 5) << "\" y=\"" << num(q.y - 5) << "\">" << label << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string fan_to_dot(const Fan& f) {
  std::ostringstream os;
  os << "digraph subdivision {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < f.tree.size(); ++i) {
    const TreeNode& t = f.tree[i];
    os << "  n" << i << " [label=\"" << word_label(t.word) << "\\n" << t.local_type.str() << "\"";
    if (t.children.empty()) os << ", style=filled, fillcolor=\"#e8f4e8\"";
    os << "];\n";
  }
  for (std::size_t i = 0; i < f.tree.size(); ++i)
    for (std::size_t c : f.tree[i].children) os << "  n" << i << " -> n" << c << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace fores
