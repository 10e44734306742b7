#include "maxgenus/linkage.hpp"

#include <numeric>

namespace maxgenus::linkage {
namespace {

void require_gorenstein_case(scroll::ScrollType scroll) {
  if (scroll == scroll::ScrollType::S003) {
    throw ParameterError("genus relation is only available on S111 and S012");
  }
}

}  // namespace

Integer genus_relation(scroll::ScrollType scroll, const Integer& pa_C, const Integer& pa_Y, const Integer& deg_Cpp,
                       const Integer& r_int, const Integer& m, const Integer& w) {
  require_gorenstein_case(scroll);
  return pa_C - pa_Y + (m + w - 1) * deg_Cpp + r_int + 1;
}

Integer genus_of_linked_curve(scroll::ScrollType scroll, const Integer& pa_Cpp, const Integer& pa_Y,
                              const Integer& deg_Cpp, const Integer& r_int, const Integer& m, const Integer& w) {
  require_gorenstein_case(scroll);
  return pa_Cpp + pa_Y - (m + w - 1) * deg_Cpp - r_int - 1;
}

Integer genus_of_complete_intersection(scroll::ScrollType scroll, const Integer& pa_C, const Integer& pa_Cpp,
                                       const Integer& deg_Cpp, const Integer& r_int, const Integer& m,
                                       const Integer& w) {
  require_gorenstein_case(scroll);
  return pa_C - pa_Cpp + (m + w - 1) * deg_Cpp + r_int + 1;
}

Integer plane_curve_genus(const Integer& degree) {
  if (degree < 1) {
    throw ParameterError("plane_curve_genus: degree must be positive, got " + degree.get_str());
  }
  return (degree - 1) * (degree - 2) / 2;
}

Integer quadric_type_genus(const Integer& a, const Integer& b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0)) {
    throw ParameterError("quadric_type_genus: invalid type (" + a.get_str() + ", " + b.get_str() + ")");
  }
  return (a - 1) * (b - 1);
}

Integer nodal_genus(const std::vector<Integer>& genera, const Integer& nodes) {
  if (nodes < 0) {
    throw ParameterError("nodal_genus: negative node count");
  }
  const Integer sum = std::accumulate(genera.begin(), genera.end(), Integer(0));
  return sum + nodes - static_cast<long>(genera.size()) + 1;
}

Integer union_genus(const std::vector<Integer>& genera, const Integer& nodes) {
  const long c = static_cast<long>(genera.size());
  if (c > 1 && nodes < c - 1) {
    throw ParameterError("union_genus: " + std::to_string(c) + " components with " + nodes.get_str() +
                         " nodes cannot be connected");
  }
  return nodal_genus(genera, nodes);
}

Integer residual_degree(const Integer& d, const Integer& s, const Integer& m) {
  const Integer r = s * (m + 1) - d;
  if (r < 0) {
    throw ParameterError("residual_degree: s(m+1) - d is negative for d = " + d.get_str());
  }
  return r;
}

Integer LinkedCurveData::degree() const {
  Integer total = 0;
  for (const auto& c : components) total += c.degree;
  return total;
}

Integer LinkedCurveData::node_count() const {
  Integer total = 0;
  for (const auto& n : nodes) total += n.count;
  return total;
}

bool LinkedCurveData::connected() const {
  if (components.size() <= 1) {
    return true;
  }
  std::vector<std::size_t> parent(components.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& n : nodes) {
    if (n.count > 0) parent[find(n.first)] = find(n.second);
  }
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < components.size(); ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

Integer LinkedCurveData::genus() const {
  std::vector<Integer> genera;
  genera.reserve(components.size());
  for (const auto& c : components) genera.push_back(c.genus);
  return nodal_genus(genera, node_count());
}

}  // namespace maxgenus::linkage
