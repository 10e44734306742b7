#include "maxgenus/classifier.hpp"

#include <algorithm>

namespace maxgenus::classify {

using bounds::ExtremalParams;
using scroll::DivisorClass;
using scroll::ResolvedClass;
using scroll::ScrollType;

std::string_view name(CoarseCase c) {
  switch (c) {
    case CoarseCase::CompleteIntersection:
      return "CompleteIntersection";
    case CoarseCase::PlaneCurve:
      return "PlaneCurve";
    case CoarseCase::OnDegree2Surface:
      return "OnDegree2Surface";
    case CoarseCase::OnDegree3Surface:
      return "OnDegree3Surface";
  }
  return "?";
}

CoarseCase coarse_case_for(long k) {
  switch (k) {
    case 3:
      return CoarseCase::CompleteIntersection;
    case 2:
      return CoarseCase::PlaneCurve;
    case 1:
      return CoarseCase::OnDegree2Surface;
    case 0:
      return CoarseCase::OnDegree3Surface;
    default:
      throw ParameterError("coarse_case_for: k must lie in 0..3, got " + std::to_string(k));
  }
}

std::vector<SurfaceClassOfS> candidate_s_classes(long w, long v) {
  std::vector<SurfaceClassOfS> out{{DivisorClass{w + 1, -(2 - v)}}};
  if (v == 0) {
    out.push_back({DivisorClass{w, 1}});
  }
  return out;
}

void check_s_class(const ExtremalParams& p, ScrollType scroll, const SurfaceClassOfS& s_class) {
  if (scroll == ScrollType::S003) {
    if (s_class.cls.total_degree() != p.s) {
      throw ParameterError("class " + format(s_class.cls) + " has degree " + s_class.cls.total_degree().get_str() +
                           ", expected s = " + std::to_string(p.s));
    }
    return;
  }
  const auto candidates = candidate_s_classes(p.w, p.v);
  const bool ok = std::any_of(candidates.begin(), candidates.end(),
                              [&](const SurfaceClassOfS& c) { return c.cls == s_class.cls; });
  if (!ok) {
    std::string expected;
    for (const auto& c : candidates) expected += (expected.empty() ? "" : " or ") + format(c.cls);
    throw ParameterError("class " + format(s_class.cls) + " is not a class of S for s = " + std::to_string(p.s) +
                         " (expected " + expected + ")");
  }
}

bool nonexistence_on_smooth_scroll(const ExtremalParams& p, const SurfaceClassOfS& s_class) {
  if (p.k != 1) {
    return false;
  }
  const long w = p.w;
  const long eps = p.eps;
  if (p.v == 1) {
    return eps != w && eps != w + 1 && eps != 2 * w - 1;
  }
  if (p.v == 0 && !s_class.is_w_h_plus_r(w)) {
    return eps != w && eps != w + 1;
  }
  return false;
}

namespace {

std::string str(long x) { return std::to_string(x); }

const char* kPlaneR = "plane pi ~ R";
const char* kPlaneP = "plane p ~ H-2R";
const char* kQuadric = "smooth quadric Q ~ H-R";
const char* kSigma = "plane sigma not contained in X";
const char* kLine = "singular line l";

FineComponent plane_curve(std::string label, long degree, std::string support, std::string vertex = {}) {
  return {std::move(label), degree, std::move(support), std::nullopt, std::move(vertex), std::nullopt};
}

// Keeps only components of positive degree.
std::vector<FineComponent> nonempty(std::vector<FineComponent> comps) {
  comps.erase(std::remove_if(comps.begin(), comps.end(), [](const FineComponent& c) { return c.degree <= 0; }),
              comps.end());
  return comps;
}

// Plane-curve case (k = 2) on the scroll with a point vertex.
FineCase plane_case(const ExtremalParams& p, const SurfaceClassOfS& s_class, std::vector<std::string>& notes) {
  FineCase fine{"k=2 on S(0,1,2): C' is a plane curve", {}};
  const long w = p.w;
  const long deg = p.residual_degree();
  auto& opts = fine.options;
  if (p.v == 2) {
    opts.push_back({"plane.v2", "plane pi ~ R", std::nullopt,
                    {plane_curve("C'", deg, kPlaneR, "does not pass through V")},
                    {},
                    {"1 <= deg C' <= w+1"}});
  } else if (p.v == 1) {
    if (deg == w + 1) {
      opts.push_back({"plane.v1.a", "plane pi ~ R", std::nullopt,
                      {plane_curve("C'", deg, kPlaneR, "passes through V")},
                      {},
                      {"deg C' = w+1, eps = 2w"}});
    }
    if (deg <= w) {
      opts.push_back({"plane.v1.b.pi", "plane pi ~ R", std::nullopt,
                      {plane_curve("C'", deg, kPlaneR, "may or may not pass through V")},
                      {},
                      {"deg C' <= w, 2w < eps <= 3w"}});
      opts.push_back({"plane.v1.b.p", "plane p ~ H-2R", std::nullopt,
                      {plane_curve("C'", deg, kPlaneP, "may or may not pass through V")},
                      {},
                      {"deg C' <= w, 2w < eps <= 3w"}});
    }
    if (deg == 2) {
      opts.push_back({"plane.v1.c.lines", "plane sigma not contained in X", std::nullopt,
                      {plane_curve("C'_1", 1, "line through V"), plane_curve("C'_2", 1, "line through V")},
                      {"C'_1 and C'_2 meet at V"},
                      {"deg C' = 2, eps = 3w-1"}});
      opts.push_back({"plane.v1.c.cone", "plane sigma not contained in X", std::nullopt,
                      {plane_curve("C'", 2, "hyperplane section of a quadric cone ~ H-R")},
                      {},
                      {"deg C' = 2, eps = 3w-1"}});
    }
  } else if (s_class.is_w_h_plus_r(w)) {
    opts.push_back({"plane.v0.wHR", "plane pi ~ R", std::nullopt,
                    {plane_curve("C'", deg, kPlaneR, "may or may not pass through V")},
                    {},
                    {"1 <= deg C' <= w"}});
  } else {
    if (deg <= w - 1) {
      opts.push_back({"plane.v0.p", "plane p ~ H-2R", std::nullopt,
                      {plane_curve("C'", deg, kPlaneP, "may or may not pass through V")},
                      {},
                      {"1 <= deg C' <= w-1 (2w < eps <= 3w-1)"}});
    }
    if (deg == 1) {
      opts.push_back({"plane.v0.line", "plane pi ~ R", std::nullopt,
                      {plane_curve("C'", 1, kPlaneR, "passes through V")},
                      {},
                      {"deg C' = 1, eps = 3w-1"}});
    }
    if (deg == w) {
      notes.push_back(
          "S ~ (w+1)H-2R: constraints 1 <= deg C' <= w-1 and deg C' != w (S.p.H = w-1); deg C' = w has no fine shape");
    }
  }
  return fine;
}

// Quadric case (k = 1) on the smooth scroll.
FineCase quadric_case(const ExtremalParams& p, const SurfaceClassOfS& s_class, std::vector<std::string>& notes) {
  FineCase fine{"k=1 on S(1,1,1): C' lies on a surface of degree 2", {}};
  const long w = p.w;
  const long v = p.v;
  const long eps = p.eps;
  const bool w_h_plus_r = v == 0 && s_class.is_w_h_plus_r(w);
  auto& opts = fine.options;

  if (!w_h_plus_r && (eps == w || eps == w + 1)) {
    const long a = w - 1 + v;
    const long b = eps == w ? w + 1 : w;
    FineComponent c{"C'", a + b, kQuadric, std::make_pair(Integer(a), Integer(b)), {}, std::nullopt};
    opts.push_back({"quadric.1", "smooth quadric Q ~ H-R", std::nullopt, {c}, {}, {"eps in {w, w+1}"}});
  }
  if (v == 2 || w_h_plus_r) {
    const long d1 = v == 2 ? 2 * w + 1 - eps : 2 * w - eps;
    const long d2 = v == 2 ? w + 1 : w;
    opts.push_back({"quadric.2", "two disjoint planes pi_1, pi_2 ~ R", std::nullopt,
                    nonempty({plane_curve("C'_1", d1, "plane pi_1 ~ R"), plane_curve("C'_2", d2, "plane pi_2 ~ R")}),
                    {"C'_1 and C'_2 are disjoint"},
                    {}});
  }
  auto plane_plus_sigma = [&](std::string id, long sigma_degree, std::pair<long, long> type, std::string constraint) {
    FineComponent c2{"C'_2", sigma_degree, kSigma, std::make_pair(Integer(type.first), Integer(type.second)), {},
                     std::nullopt};
    opts.push_back({std::move(id), "plane pi ~ R union a plane sigma not contained in X", std::nullopt,
                    {plane_curve("C'_1", w + 1, kPlaneR), c2},
                    {"C'_1 and C'_2 meet in one point"},
                    {std::move(constraint)}});
  };
  if (v == 2 && eps == 2 * w - 1) {
    plane_plus_sigma("quadric.3a", 2, {1, 1}, "v = 2, eps = 2w-1");
  }
  if (v == 2 && eps == 2 * w) {
    plane_plus_sigma("quadric.3b", 1, {0, 1}, "v = 2, eps = 2w");
    notes.push_back("plane-plus-line shape placed at eps = 2w, where deg C' = w+2");
  }
  if (v == 1 && eps == 2 * w - 1) {
    plane_plus_sigma("quadric.3c", 1, {0, 1}, "v = 1, eps = 2w-1");
  }
  return fine;
}

// Cubic case (k = 0) on the scroll with a line vertex.
FineCase cubic_case(const ExtremalParams& p, std::vector<std::string>& notes) {
  FineCase fine{"k=0 on S(0,0,3): C' lies on a surface of degree 3", {}};
  const long w = p.w;
  const long v = p.v;
  const long eps = p.eps;
  const long deg = p.residual_degree();
  auto& opts = fine.options;
  const std::string hyperplane = "hyperplane section L ~ 3R of X";
  const std::string three_planes = "L = pi_1 + pi_2 + pi_3, three planes ~ R through l";

  auto line = [](Integer mult) {
    return FineComponent{"l", mult, kLine, std::nullopt, {}, mult};
  };

  if (eps == 0) {
    opts.push_back({"cubic.1a", hyperplane, std::nullopt,
                    {plane_curve("C'", deg, "hyperplane section L")},
                    {"C' is linked to a line by S ∩ L"},
                    {"eps = 0"}});
  } else if (eps == 1) {
    opts.push_back({"cubic.1b", hyperplane, std::nullopt,
                    {plane_curve("C'", deg, "hyperplane section L")},
                    {"C' is linked to a conic by S ∩ L"},
                    {"eps = 1"}});
  } else if (v == 2) {
    for (long a = 0; a <= w - eps; ++a) {
      opts.push_back({"cubic.1c.v2.a=" + str(a), three_planes, ResolvedClass{w + 1 - a, 3 * a},
                      nonempty({line(3 * a), plane_curve("C'_1", w + 1 - a, "plane pi_1 ~ R"),
                                plane_curve("C'_2", w + 1 - a, "plane pi_2 ~ R"),
                                plane_curve("C'_3", w - eps - a, "plane pi_3 ~ R")}),
                      {"C'_1 ∩ C'_2: " + str(w + 1 - a) + " points on l",
                       "C'_1 ∩ C'_3 and C'_2 ∩ C'_3: " + str(w - eps - a) + " points on l each"},
                      {"0 <= a <= w - eps"}});
    }
  } else if (v == 1) {
    bool negative_count = false;
    for (long a = eps + 1; a <= w; ++a) {
      std::vector<std::string> meets{"C'_1 ∩ C'_2: " + str(w + 1 - a) + " points on l"};
      if (w - eps - a >= 0) {
        meets.push_back("C'_1 ∩ C'_3 and C'_2 ∩ C'_3: " + str(w - eps - a) + " points on l each");
      } else {
        negative_count = true;
      }
      opts.push_back({"cubic.1c.v1.a=" + str(a), three_planes, ResolvedClass{a, 3 * w - 3 * a + 2},
                      nonempty({line(3 * (w - a) + 2), plane_curve("C'_1", a, "plane pi_1 ~ R"),
                                plane_curve("C'_2", a, "plane pi_2 ~ R"),
                                plane_curve("C'_3", a - eps - 1, "plane pi_3 ~ R")}),
                      std::move(meets),
                      {"eps + 1 <= a <= w"}});
    }
    if (negative_count) {
      notes.push_back("v = 1: the count w - eps - a of C'_3 meeting C'_1, C'_2 is negative for some a; those counts are omitted");
    }
  } else {
    const ResolvedClass s_tilde{w, 1};
    if (eps == w - 1) {
      opts.push_back({"cubic.1c.v0", three_planes, s_tilde,
                      nonempty({plane_curve("C'_1", w, "plane pi_1 ~ R"), plane_curve("C'_2", w, "plane pi_2 ~ R"),
                                plane_curve("C'_3", w - eps, "plane pi_3 ~ R")}),
                      {"C'_1 ∩ C'_2: " + str(w) + " points on l",
                       "C'_1 ∩ C'_3 and C'_2 ∩ C'_3: " + str(w - eps) + " points on l each", "C' does not contain l"},
                      {"eps = w-1"}});
    } else {
      opts.push_back({"cubic.1c.v0.l", three_planes, s_tilde,
                      nonempty({line(1), plane_curve("C'_1", w, "plane pi_1 ~ R"),
                                plane_curve("C'_2", w, "plane pi_2 ~ R"),
                                plane_curve("C'_3", w - eps - 1, "plane pi_3 ~ R")}),
                      {"C'_1 ∩ C'_2: " + str(w) + " points on l",
                       "C'_1 ∩ C'_3 and C'_2 ∩ C'_3: " + str(w - eps - 1) + " points on l each"},
                      {"eps < w-1; C' may contain l with multiplicity 1"}});
    }
  }
  if (v == 0 && eps == w - 2) {
    opts.push_back({"cubic.2", "pi_1 + pi_2 (~ R) union a plane sigma not contained in X", std::nullopt,
                    {plane_curve("C'_1", w, "plane pi_1 ~ R"), plane_curve("C'_2", w, "plane pi_2 ~ R"),
                     plane_curve("r_1", 1, "line sigma ∩ X"), plane_curve("r_2", 1, "line sigma ∩ X")},
                    {"C'_1 ∩ C'_2: " + str(w) + " points on l",
                     "r_1 and r_2 meet C'_1 and C'_2 in their common point on l", "C' does not contain l"},
                    {"v = 0, eps = w-2"}});
  }
  return fine;
}

}  // namespace

ClassificationReport classify(const Integer& d, long s, ScrollType scroll, const SurfaceClassOfS& s_class,
                              const ClassifyOptions& options) {
  if (s < 9 && !(options.allow_small_s && s >= 4)) {
    throw ParameterError("classify: classification needs s >= 9, got s = " + std::to_string(s));
  }
  const ExtremalParams p = bounds::decompose(d, s);
  check_s_class(p, scroll, s_class);

  ClassificationReport report{};
  report.params = p;
  report.scroll = scroll;
  report.s_class = s_class;
  report.case_k = p.k;
  report.residual_degree = p.residual_degree();
  report.coarse = coarse_case_for(p.k);
  report.outside_theorem_range = !bounds::admissible(d, s);
  if (report.residual_degree != Integer(s) * (p.m + 1) - d) {
    throw ConsistencyError("classify: residual degree bookkeeping failed");
  }
  if (s < 9) {
    report.notes.push_back("warning: s < 9 lies outside the classification range; coarse case only");
    return report;
  }
  if (report.outside_theorem_range) {
    report.notes.push_back("d is below the admissibility threshold; the classification is not proven there");
  }

  if (p.k == 3) {
    report.notes.push_back("C' is empty: C is a complete intersection of S and F");
  } else if (p.k == 2 && scroll == ScrollType::S012) {
    report.fine = plane_case(p, s_class, report.notes);
  } else if (p.k == 1 && scroll == ScrollType::S111) {
    report.nonexistent = nonexistence_on_smooth_scroll(p, s_class);
    report.fine = quadric_case(p, s_class, report.notes);
    report.notes.push_back("nonexistence condition evaluated on the smooth scroll S(1,1,1)");
        if (report.nonexistent) {
      report.notes.push_back("no curve of maximal genus exists on S(1,1,1) for these parameters");
    }
  } else if (p.k == 0 && scroll == ScrollType::S003) {
    report.fine = cubic_case(p, report.notes);
  } else {
    report.notes.push_back("fine shape not available: detailed only for k=2 on S012, k=1 on S111, k=0 on S003");
  }
  return report;
}

std::vector<ClassificationReport> classify_all_classes(const Integer& d, long s, ScrollType scroll,
                                                       const ClassifyOptions& options) {
  const ExtremalParams p = bounds::decompose(d, s);
  std::vector<ClassificationReport> out;
  for (const SurfaceClassOfS& c : candidate_s_classes(p.w, p.v)) {
    out.push_back(classify(d, s, scroll, c, options));
  }
  return out;
}

std::vector<ResidualComponent> residual_composition(const ExtremalParams& p, ScrollType scroll,
                                                    const SurfaceClassOfS& s_class) {
  check_s_class(p, scroll, s_class);
  const Integer m1 = p.m + 1;
  if (p.v == 2) {
    return {};
  }
  if (p.v == 1) {
    return {{"C_1", m1, "plane p_1 ~ R linked to S by G", std::nullopt}};
  }
  // On S003 the divisor linked to S by G is always ~ 2R.
  if (scroll != ScrollType::S003 && s_class.is_w_h_plus_r(p.w)) {
    return {{"C_q", 2 * m1, "q ~ H-R linked to S by G; C_q = q ∩ F", std::make_pair(m1, m1)}};
  }
  return {{"C_1", m1, "plane p_1 ~ R linked to S by G", std::nullopt},
          {"C_2", m1, "plane p_2 ~ R linked to S by G", std::nullopt}};
}

Integer line_multiplicity_in_residual(const ResolvedClass& s_proper, const ResolvedClass& f_proper) {
  if (f_proper.h < 0 || f_proper.r < 0 || floor_mod(f_proper.r, 3) != 0) {
    throw ParameterError("line_multiplicity_in_residual: F~ = " + format(f_proper) +
                         " is not of the form (m+1-b)H~ + 3bR~");
  }
  if (s_proper.h < 0 || s_proper.r < 0) {
    throw ParameterError("line_multiplicity_in_residual: S~ = " + format(s_proper) + " is not effective");
  }
  return scroll::multiplicity_along_l(f_proper, s_proper);
}

}  // namespace maxgenus::classify
