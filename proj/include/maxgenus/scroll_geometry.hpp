#pragma once

// Divisor calculus on the three cubic rational normal 3-folds X in P^5.
//
// X is the image of P(E) -> P^1 with E = O(e1) + O(e2) + O(e3), e1+e2+e3 = 3.
// The resolution P(E) has Pic = Z[H~] + Z[R~] with
//   H~^3 = 3,  R~.H~^2 = 1,  R~^2.H~ = 0,  R~^3 = 0.
// On S(1,1,1) and S(0,1,2) this is also the Weil class group of X. On S(0,0,3)
// H ~ 3R, so a Weil class is determined by its total degree t = 3h + r, and
// intersection degrees go through the integral total transform on P(E).

#include <array>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "maxgenus/numeric.hpp"

namespace maxgenus::scroll {

enum class ScrollType { S111, S012, S003 };

/// Splitting degrees (e1, e2, e3) of the bundle, ascending.
std::array<int, 3> splitting_degrees(ScrollType type);
std::string_view name(ScrollType type);
/// Accepts "S111"/"s111"/"S(1,1,1)" and the analogous spellings.
ScrollType parse_scroll(std::string_view text);

/// True for the one scroll whose vertex is a line.
inline bool has_singular_line(ScrollType t) { return t == ScrollType::S003; }
/// True for the one scroll whose vertex is a point.
inline bool has_vertex_point(ScrollType t) { return t == ScrollType::S012; }

/// Weil divisor class hH + rR on X.
struct DivisorClass {
  Integer h;
  Integer r;

  static DivisorClass hyperplane() { return {1, 0}; }
  static DivisorClass ruling() { return {0, 1}; }

  /// 3h + r: degree of the class as a surface in P^5, and the class-invariant on S(0,0,3).
  Integer total_degree() const { return 3 * h + r; }

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return {a.h + b.h, a.r + b.r}; }
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return {a.h - b.h, a.r - b.r}; }
  friend DivisorClass operator*(const Integer& k, const DivisorClass& a) { return {k * a.h, k * a.r}; }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.h == b.h && a.r == b.r; }
};

/// Class hH~ + rR~ on the resolution P(E).
struct ResolvedClass {
  Integer h;
  Integer r;

  static ResolvedClass hyperplane() { return {1, 0}; }
  static ResolvedClass ruling() { return {0, 1}; }
  /// E ~ H~ - 3R~, the exceptional divisor over the singular line of S(0,0,3).
  static ResolvedClass exceptional() { return {1, -3}; }

  friend ResolvedClass operator+(const ResolvedClass& a, const ResolvedClass& b) { return {a.h + b.h, a.r + b.r}; }
  friend ResolvedClass operator-(const ResolvedClass& a, const ResolvedClass& b) { return {a.h - b.h, a.r - b.r}; }
  friend ResolvedClass operator*(const Integer& k, const ResolvedClass& a) { return {k * a.h, k * a.r}; }
  friend bool operator==(const ResolvedClass& a, const ResolvedClass& b) { return a.h == b.h && a.r == b.r; }
};

/// Integral total transform D* = D~ + ceil(q) E of a Weil divisor on S(0,0,3), q = r(D~)/3.
struct TotalTransform {
  ResolvedClass resolved;  // D* itself
  Integer ceil_q;          // coefficient of E
  Rational eps;            // ceil(q) - q, one of 0, 1/3, 2/3
};

/// Intersection number a.b.c on P(E); symmetric and trilinear.
Integer triple_product(const ResolvedClass& a, const ResolvedClass& b, const ResolvedClass& c);

/// Intersection number of Weil classes on S(1,1,1) or S(0,1,2). Throws ParameterError on S(0,0,3),
/// where classes are not a free rank-2 group.
Integer triple_product(ScrollType type, const DivisorClass& a, const DivisorClass& b, const DivisorClass& c);

/// h^0(O_X(hH + rR)) from the closed formula 3 C(h+2,3) + (r+1) C(h+2,2), valid for h >= 0, r >= -1.
Integer h0_closed_form(const DivisorClass& cls);

/// h^0(O_X(hH + rR)) by pushing forward to P^1: sum over degree-h monomials x^alpha in the
/// three summands of E of h^0(O_P1(alpha.e + r)). Total in (h, r); zero for h < 0.
Integer h0_pushforward(ScrollType type, const DivisorClass& cls);

/// Public entry point; the pushforward sum is valid everywhere and agrees with the closed formula
/// on its range.
Integer h0_weil(ScrollType type, const DivisorClass& cls);

/// Proper transform of a generic member of |tR| on S(0,0,3): aH~ + bR~ with t = 3a + b, 0 <= b < 3.
ResolvedClass canonicalize_s003(const Integer& total_degree);

/// Convenience overload: canonical representative of a Weil class on S(0,0,3).
inline ResolvedClass canonicalize_s003(const DivisorClass& cls) { return canonicalize_s003(cls.total_degree()); }

/// D* for an explicit proper transform on S(0,0,3); requires r >= 0.
TotalTransform total_transform(const ResolvedClass& proper);

/// deg(D ∩ D') on S(0,0,3) for proper transforms of effective divisors without common components.
/// Throws ParameterError if the total-transform product is negative.
Integer intersection_degree_s003(const ResolvedClass& p1, const ResolvedClass& p2);

/// Intersection multiplicity of D and D' along the singular line of S(0,0,3).
Integer multiplicity_along_l(const ResolvedClass& p1, const ResolvedClass& p2);

/// Effective by class criteria: h >= 0 and h^0 > 0.
bool is_effective(ScrollType type, const ResolvedClass& cls);

/// Whether a generic member of |aH~ + bR~| is irreducible. Throws ParameterError on non-effective classes.
bool is_irreducible_class(ScrollType type, const ResolvedClass& proper);

/// K = -3H~ + R~ on P(E), for all three bundle types.
ResolvedClass canonical_class(ScrollType type);

/// Arithmetic genus of the complete intersection X ∩ F ∩ G with F ~ fH, G ~ gH (degree 3fg),
/// by adjunction with the canonical class above.
Integer ci_curve_genus(const Integer& f, const Integer& g);

// String grammar: "aH+bR", "5R", "H-2R", "-H", "0"; resolved classes use "H~" and "R~".
DivisorClass parse_divisor(std::string_view text);
ResolvedClass parse_resolved(std::string_view text);
std::string format(const DivisorClass& cls);
std::string format(const ResolvedClass& cls);

inline std::ostream& operator<<(std::ostream& os, const DivisorClass& c) { return os << format(c); }
inline std::ostream& operator<<(std::ostream& os, const ResolvedClass& c) { return os << format(c); }
inline std::ostream& operator<<(std::ostream& os, ScrollType t) { return os << name(t); }

}  // namespace maxgenus::scroll
