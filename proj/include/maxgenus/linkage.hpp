#pragma once

// Liaison arithmetic for C and C'' linked by the complete intersection Y = X ∩ F ∩ G, where
// deg F = m + 1 and deg G = w + 1.

#include <cstddef>
#include <string>
#include <vector>

#include "maxgenus/numeric.hpp"
#include "maxgenus/scroll_geometry.hpp"

namespace maxgenus::linkage {

/// p_a(C'') = p_a(C) - p_a(Y) + (m + w - 1) deg C'' + deg(R ∩ C'') + 1.
/// Only stated for S111 and S012; S003 throws ParameterError.
Integer genus_relation(scroll::ScrollType scroll, const Integer& pa_C, const Integer& pa_Y, const Integer& deg_Cpp,
                       const Integer& r_int, const Integer& m, const Integer& w);

/// The same relation solved for p_a(C).
Integer genus_of_linked_curve(scroll::ScrollType scroll, const Integer& pa_Cpp, const Integer& pa_Y,
                              const Integer& deg_Cpp, const Integer& r_int, const Integer& m, const Integer& w);

/// The same relation solved for p_a(Y).
Integer genus_of_complete_intersection(scroll::ScrollType scroll, const Integer& pa_C, const Integer& pa_Cpp,
                                       const Integer& deg_Cpp, const Integer& r_int, const Integer& m,
                                       const Integer& w);

/// Clebsch: (n - 1)(n - 2) / 2 for a plane curve of degree n >= 1.
Integer plane_curve_genus(const Integer& degree);

/// (a - 1)(b - 1) for a curve of type (a, b) on a smooth quadric; (0, 0) is rejected.
Integer quadric_type_genus(const Integer& a, const Integer& b);

/// Arithmetic genus of a reduced curve whose components meet transversally:
/// sum g_i + nodes - c + 1. Holds whether or not the union is connected.
Integer nodal_genus(const std::vector<Integer>& genera, const Integer& nodes);

/// Noether's formula for a connected nodal union. A configuration with fewer than c - 1 nodes
/// cannot be connected and is rejected.
Integer union_genus(const std::vector<Integer>& genera, const Integer& nodes);

/// deg C' = s(m + 1) - d; negative values are rejected.
Integer residual_degree(const Integer& d, const Integer& s, const Integer& m);

struct CurveComponent {
  std::string label;
  Integer degree;
  Integer genus;
};

/// `count` transversal intersection points between components `first` and `second`.
struct NodeGroup {
  std::size_t first;
  std::size_t second;
  Integer count;
  std::string where;
};

struct LinkedCurveData {
  std::vector<CurveComponent> components;
  std::vector<NodeGroup> nodes;
  Integer r_intersection;  // deg(R ∩ C'')

  Integer degree() const;
  Integer node_count() const;
  bool connected() const;
  /// nodal_genus over the listed components and nodes.
  Integer genus() const;
};

}  // namespace maxgenus::linkage
