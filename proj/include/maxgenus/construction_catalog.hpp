#pragma once

// Existence recipes for extremal curves as arithmetic data: for each (k, v) the seed curve D,
// the class of S, the components of C'' with their pairwise nodes and deg(R ∩ C''). Each
// recipe is checked by solving the genus relation for p_a(C) and comparing with the profile.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maxgenus/classifier.hpp"
#include "maxgenus/extremal_bounds.hpp"
#include "maxgenus/linkage.hpp"
#include "maxgenus/scroll_geometry.hpp"

namespace maxgenus::catalog {

struct Recipe {
  long k = 0;
  long v = 0;
  scroll::ScrollType required_scroll = scroll::ScrollType::S111;
  std::optional<Integer> seed_degree;  // deg D; absent when C is a complete intersection of S and F
  classify::SurfaceClassOfS s_class;
  linkage::LinkedCurveData cpp;  // C'' with r_intersection = deg(R ∩ C'')
  std::vector<std::string> flags;
  std::vector<std::string> annotations;
  /// k=1, v=1 only: the configuration without the node at V, kept for comparison.
  std::optional<linkage::LinkedCurveData> printed_reading;
};

/// The recipe for these parameters. For v = 0 the class of S defaults to wH + R; with k = 3
/// the class (w+1)H - 2R is also accepted. Throws ParameterError outside every recipe's range.
Recipe recipe_for(const bounds::ExtremalParams& params, const std::optional<scroll::DivisorClass>& s_class = {});

/// p_a(C) from the genus relation with p_a(C'') = recipe.cpp.genus() and p_a(Y) = ci_curve_genus(m+1, w+1).
Integer expected_genus(const Recipe& recipe, const bounds::ExtremalParams& params);

struct CellRecord {
  long s = 0;
  long eps = 0;
  long m = 0;
  Integer d;
  long k = 0;
  long v = 0;
  scroll::ScrollType scroll = scroll::ScrollType::S111;
  Integer genus_profile;
  std::optional<Integer> genus_liaison;
  std::optional<Integer> genus_adjunction;  // k=3, v=2 cells
  std::string status;                       // "pass" or "fail"
  std::string note;
};

struct VerifyReport {
  std::vector<CellRecord> cells;
  std::size_t failures = 0;
  std::size_t adjunction_cells = 0;

  bool ok() const { return failures == 0; }
};

/// One record per grid cell, in grid order. `threads` = 0 picks the hardware concurrency.
VerifyReport verify_all(long s_min, long s_max, const bounds::MSpec& m_spec, unsigned threads = 0);

/// Records for an explicit list of cells.
VerifyReport verify_cells(const std::vector<bounds::GridCell>& cells, unsigned threads = 0);

}  // namespace maxgenus::catalog
