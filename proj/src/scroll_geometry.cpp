#include "maxgenus/scroll_geometry.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace maxgenus::scroll {

std::array<int, 3> splitting_degrees(ScrollType type) {
  switch (type) {
    case ScrollType::S111:
      return {1, 1, 1};
    case ScrollType::S012:
      return {0, 1, 2};
    case ScrollType::S003:
      return {0, 0, 3};
  }
  throw ParameterError("unknown scroll type");
}

std::string_view name(ScrollType type) {
  switch (type) {
    case ScrollType::S111:
      return "S111";
    case ScrollType::S012:
      return "S012";
    case ScrollType::S003:
      return "S003";
  }
  return "?";
}

ScrollType parse_scroll(std::string_view text) {
  std::string digits;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
    } else if (ch != 'S' && ch != 's' && ch != '(' && ch != ')' && ch != ',' && ch != ' ') {
      throw ParseError("unrecognised scroll type '" + std::string(text) + "'");
    }
  }
  if (digits == "111") return ScrollType::S111;
  if (digits == "012") return ScrollType::S012;
  if (digits == "003") return ScrollType::S003;
  throw ParseError("unrecognised scroll type '" + std::string(text) + "' (expected S111, S012 or S003)");
}

Integer triple_product(const ResolvedClass& a, const ResolvedClass& b, const ResolvedClass& c) {
  // Only monomials with at most one R~ survive: H~^3 = 3, R~.H~^2 = 1.
  return 3 * a.h * b.h * c.h + a.h * b.h * c.r + a.h * b.r * c.h + a.r * b.h * c.h;
}

Integer triple_product(ScrollType type, const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) {
  if (type == ScrollType::S003) {
    throw ParameterError(
        "triple_product: Weil classes on S003 are not a free rank-2 group; pass proper transforms "
        "or use intersection_degree_s003");
  }
  return triple_product(ResolvedClass{a.h, a.r}, ResolvedClass{b.h, b.r}, ResolvedClass{c.h, c.r});
}

Integer h0_closed_form(const DivisorClass& cls) {
  if (cls.h < 0) {
    return 0;
  }
  if (cls.r < -1) {
    throw ParameterError("h0_closed_form: formula needs r >= -1, got " + format(cls));
  }
  return 3 * binomial(cls.h + 2, 3) + (cls.r + 1) * binomial(cls.h + 2, 2);
}

namespace {

// Sum of max(0, c + slope*j) for j = 0 .. n-1.
Integer sum_positive_part(const Integer& c, const Integer& slope, const Integer& n) {
  if (n <= 0) {
    return 0;
  }
  Integer lo = 0;
  Integer hi = n - 1;
  if (slope == 0) {
    return c > 0 ? Integer(n * c) : Integer(0);
  }
  if (slope > 0) {
    if (c <= 0) {
      lo = floor_div(-c, slope) + 1;
    }
  } else {
    if (c <= 0) {
      return 0;
    }
    hi = std::min(hi, Integer(ceil_div(c, -slope) - 1));
  }
  if (lo > hi) {
    return 0;
  }
  const Integer count = hi - lo + 1;
  return count * c + slope * (lo + hi) * count / 2;
}

}  // namespace

Integer h0_pushforward(ScrollType type, const DivisorClass& cls) {
  if (cls.h < 0) {
    return 0;
  }
  // pi_* O(hH~ + rR~) = Sym^h(E) (x) O(r); monomial x1^a1 x2^a2 x3^a3 contributes
  // h^0(O_P1(a1 e1 + a2 e2 + a3 e3 + r)).
  const auto e = splitting_degrees(type);
  const long h = to_int64(cls.h);
  Integer total = 0;
  for (long a1 = 0; a1 <= h; ++a1) {
    const long rest = h - a1;
    // a2 runs over 0..rest, a3 = rest - a2.
    const Integer c = Integer(a1) * e[0] + Integer(rest) * e[2] + cls.r + 1;
    const Integer slope = e[1] - e[2];
    total += sum_positive_part(c, slope, Integer(rest + 1));
  }
  return total;
}

Integer h0_weil(ScrollType type, const DivisorClass& cls) { return h0_pushforward(type, cls); }

ResolvedClass canonicalize_s003(const Integer& total_degree) {
  if (total_degree < 0) {
    throw ParameterError("canonicalize_s003: total degree must be nonnegative, got " + total_degree.get_str());
  }
  return {floor_div(total_degree, 3), floor_mod(total_degree, 3)};
}

TotalTransform total_transform(const ResolvedClass& proper) {
  if (proper.h < 0 || proper.r < 0) {
    throw ParameterError("total_transform: not the proper transform of an effective divisor: " + format(proper));
  }
  const Integer ceil_q = ceil_div(proper.r, 3);
  Rational eps = Rational(ceil_q) - Rational(proper.r, 3);
  eps.canonicalize();
  return {proper + ceil_q * ResolvedClass::exceptional(), ceil_q, eps};
}

Integer intersection_degree_s003(const ResolvedClass& p1, const ResolvedClass& p2) {
  const TotalTransform t1 = total_transform(p1);
  const TotalTransform t2 = total_transform(p2);
  Integer degree = triple_product(t1.resolved, t2.resolved, ResolvedClass::hyperplane());
  if (degree < 0) {
    throw ParameterError("intersection_degree_s003: negative product for " + format(p1) + ", " + format(p2) +
                         " (common components or invalid classes)");
  }
  const Rational sum = t1.eps + t2.eps;
  if (sum >= 1) {
    // integer part of eps + eps' is 1: add 3(eps + eps' - 1) + 1
    const Rational correction = 3 * (sum - 1) + 1;
    degree += correction.get_num();  // denominator is 1
  }
  return degree;
}

Integer multiplicity_along_l(const ResolvedClass& p1, const ResolvedClass& p2) {
  const Integer m = intersection_degree_s003(p1, p2) - triple_product(p1, p2, ResolvedClass::hyperplane());
  if (m < 0) {
    throw ConsistencyError("multiplicity_along_l: negative multiplicity for " + format(p1) + ", " + format(p2));
  }
  return m;
}

bool is_effective(ScrollType type, const ResolvedClass& cls) {
  return cls.h >= 0 && h0_pushforward(type, DivisorClass{cls.h, cls.r}) > 0;
}

bool is_irreducible_class(ScrollType type, const ResolvedClass& proper) {
  if (!is_effective(type, proper)) {
    throw ParameterError("is_irreducible_class: class " + format(proper) + " is not effective on " +
                         std::string(name(type)));
  }
  if (proper.h == 0) {
    return proper.r == 1;
  }
  // general hyperplane section smooth on S111/S012, singular on S003
  return type == ScrollType::S003 ? proper.r >= 0 : proper.r >= -proper.h;
}

ResolvedClass canonical_class(ScrollType /*type*/) { return {-3, 1}; }

Integer ci_curve_genus(const Integer& f, const Integer& g) {
  if (f < 1 || g < 1) {
    throw ParameterError("ci_curve_genus: degrees must be positive, got (" + f.get_str() + ", " + g.get_str() + ")");
  }
  // 2p_a - 2 = (K + F + G).F.G
  const ResolvedClass F{f, 0};
  const ResolvedClass G{g, 0};
  const Integer twice = triple_product(canonical_class(ScrollType::S111) + F + G, F, G);
  return twice / 2 + 1;
}

}  // namespace maxgenus::scroll
