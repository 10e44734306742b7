#pragma once

// Shape of the curve C' residual to an extremal curve C in S ∩ F, given the scroll X ⊃ S and the
// class of S on X.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxgenus/extremal_bounds.hpp"
#include "maxgenus/scroll_geometry.hpp"

namespace maxgenus::classify {

enum class CoarseCase { CompleteIntersection, PlaneCurve, OnDegree2Surface, OnDegree3Surface };

std::string_view name(CoarseCase c);
/// k = 3, 2, 1, 0 map to the four coarse cases in that order.
CoarseCase coarse_case_for(long k);

/// Class of S on X: (w+1)H - (2-v)R, or wH + R when v = 0. On S003 only the total degree matters.
struct SurfaceClassOfS {
  scroll::DivisorClass cls;

  bool is_w_h_plus_r(long w) const { return cls.h == w && cls.r == 1; }
};

/// The classes S can have for the given (w, v): one, or two when v = 0.
std::vector<SurfaceClassOfS> candidate_s_classes(long w, long v);

/// Throws ParameterError if `s_class` is not a class of a surface S for these parameters on `scroll`.
void check_s_class(const bounds::ExtremalParams& params, scroll::ScrollType scroll, const SurfaceClassOfS& s_class);

struct FineComponent {
  std::string label;
  Integer degree;
  std::string support;                                    // plane, quadric or the singular line
  std::optional<std::pair<Integer, Integer>> quadric_type;  // (a, b) on a smooth quadric
  std::string vertex;                                     // incidence with the vertex, if relevant
  std::optional<Integer> line_multiplicity;               // for the singular line l of S003
};

/// One alternative shape for C'.
struct FineOption {
  std::string id;
  std::string surface;  // the surface of degree <= 3 that contains C'
  std::optional<scroll::ResolvedClass> proper_transform_of_s;
  std::vector<FineComponent> components;
  std::vector<std::string> intersections;
  std::vector<std::string> constraints;
};

struct FineCase {
  std::string family;
  std::vector<FineOption> options;
};

struct ClassificationReport {
  bounds::ExtremalParams params;
  scroll::ScrollType scroll;
  SurfaceClassOfS s_class;
  long case_k;
  Integer residual_degree;
  CoarseCase coarse;
  std::optional<FineCase> fine;
  bool nonexistent = false;
  bool outside_theorem_range = false;
  std::vector<std::string> notes;
};

struct ClassifyOptions {
  /// Permit s in [4, 8] (coarse output only, with a warning note).
  bool allow_small_s = false;
};

ClassificationReport classify(const Integer& d, long s, scroll::ScrollType scroll, const SurfaceClassOfS& s_class,
                              const ClassifyOptions& options = {});

/// One report per candidate class of S (two when v = 0).
std::vector<ClassificationReport> classify_all_classes(const Integer& d, long s, scroll::ScrollType scroll,
                                                       const ClassifyOptions& options = {});

/// Components added to C' to form C'' (the curve residual to C in X ∩ F ∩ G).
struct ResidualComponent {
  std::string label;
  Integer degree;
  std::string support;
  std::optional<std::pair<Integer, Integer>> quadric_type;
};

std::vector<ResidualComponent> residual_composition(const bounds::ExtremalParams& params, scroll::ScrollType scroll,
                                                    const SurfaceClassOfS& s_class);

/// Multiplicity of the singular line l in C' = S ∩ F on S003, from the proper transforms of S and F.
/// F~ must have the form (m+1-b)H~ + 3bR~.
Integer line_multiplicity_in_residual(const scroll::ResolvedClass& s_proper, const scroll::ResolvedClass& f_proper);

/// Whether the parameters fall in the set where no extremal curve exists on the smooth scroll.
bool nonexistence_on_smooth_scroll(const bounds::ExtremalParams& params, const SurfaceClassOfS& s_class);

}  // namespace maxgenus::classify
