#include "maxgenus/extremal_bounds.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace maxgenus::bounds {

ExtremalParams decompose(const Integer& d, long s) {
  if (s < 4) {
    throw ParameterError("decompose: s must be at least 4, got " + std::to_string(s));
  }
  if (d <= s) {
    throw ParameterError("decompose: d must exceed s (d = " + d.get_str() + ", s = " + std::to_string(s) + ")");
  }
  ExtremalParams p;
  p.d = d;
  p.s = s;
  p.m = floor_div(d - 1, s);
  p.eps = floor_mod(d - 1, s).get_si();
  p.w = (s - 1) / 3;
  p.v = (s - 1) % 3;
  if (p.eps < p.w * (4 - p.v)) {
    p.k = p.eps / p.w;
    p.delta = p.eps % p.w;
    p.e = 0;
  } else {
    p.k = (p.eps + 3 - p.v) / (p.w + 1);
    p.delta = (p.eps + 3 - p.v) % (p.w + 1);
    p.e = 1;
  }
  if (p.k < 0 || p.k > 3) {
    throw ConsistencyError("decompose: k out of range for d = " + d.get_str());
  }
  return p;
}

bool admissible(const Integer& d, long s) {
  if (s < 4) {
    throw ParameterError("admissible: s must be at least 4");
  }
  const Integer lhs = pow(3 * d, 6);
  const Integer rhs = pow(Integer(2 * s), 6) * pow(Integer(24 * s), 11);
  return lhs > rhs;
}

Integer admissibility_threshold(long s) {
  if (s < 4) {
    throw ParameterError("admissibility_threshold: s must be at least 4");
  }
  const Integer rhs = pow(Integer(2 * s), 6) * pow(Integer(24 * s), 11);
  Integer root;
  mpz_root(root.get_mpz_t(), rhs.get_mpz_t(), 6);
  // (3d)^6 > rhs  <=>  3d > rhs^(1/6)  <=>  3d >= floor(rhs^(1/6)) + 1
  return ceil_div(root + 1, 3);
}

DeltaHProfile::DeltaHProfile(long s, Integer m, long w, std::vector<long> head, std::vector<long> tail)
    : s_(s), m_(std::move(m)), w_(w), head_(std::move(head)), tail_(std::move(tail)) {}

Integer DeltaHProfile::last_index() const { return m_ + static_cast<long>(tail_.size()); }

long DeltaHProfile::at(const Integer& n) const {
  if (n < 0 || n > last_index()) {
    return 0;
  }
  if (n <= w_) {
    return head_[n.get_ui()];
  }
  if (n <= m_) {
    return s_;
  }
  const Integer j = n - m_ - 1;
  return tail_[j.get_ui()];
}

Integer DeltaHProfile::sum() const {
  Integer total = plateau_length() * s_;
  for (long x : head_) total += x;
  for (long x : tail_) total += x;
  return total;
}

std::vector<long> DeltaHProfile::values(std::size_t max_length) const {
  const Integer length = last_index() + 1;
  if (length > Integer(static_cast<unsigned long>(max_length))) {
    throw ParameterError("profile has " + length.get_str() + " entries; too long to list");
  }
  std::vector<long> out(head_);
  out.insert(out.end(), plateau_length().get_ui(), s_);
  out.insert(out.end(), tail_.begin(), tail_.end());
  return out;
}

DeltaHProfile delta_h(const ExtremalParams& p) {
  if (p.m < p.w) {
    throw ParameterError("delta_h: the extremal profile needs m >= w (m = " + p.m.get_str() +
                         ", w = " + std::to_string(p.w) + ")");
  }
  std::vector<long> head;
  head.reserve(static_cast<std::size_t>(p.w) + 1);
  for (long n = 0; n <= p.w; ++n) {
    head.push_back(3 * n + 1);
  }
  // Tail, indexed by j = n - m for n = m+1 .. m+w+e.
  std::vector<long> tail;
  for (long j = 1; j <= p.w + p.e; ++j) {
    const long value = j <= p.delta ? p.s + p.k - 3 * j : p.s + p.k - 3 * j - 1;
    if (value < 0) {
      throw ConsistencyError("delta_h: negative entry at n = m + " + std::to_string(j));
    }
    tail.push_back(value);
  }
  DeltaHProfile profile(p.s, p.m, p.w, std::move(head), std::move(tail));
  if (profile.sum() != p.d) {
    throw ConsistencyError("delta_h: entries sum to " + profile.sum().get_str() + ", expected d = " + p.d.get_str());
  }
  return profile;
}

Integer genus_from_profile(const DeltaHProfile& profile) {
  Integer genus = 0;
  const auto& head = profile.head();
  for (std::size_t n = 2; n < head.size(); ++n) {
    genus += Integer(static_cast<long>(n) - 1) * head[n];
  }
  // plateau n = w+1 .. m contributes s * sum (n - 1)
  const Integer count = profile.plateau_length();
  if (count > 0) {
    const Integer first = profile.w();  // (w+1) - 1
    const Integer last = profile.m() - 1;
    genus += Integer(profile.plateau_value()) * (first + last) * count / 2;
  }
  const auto& tail = profile.tail();
  for (std::size_t j = 0; j < tail.size(); ++j) {
    const Integer n = profile.m() + static_cast<long>(j) + 1;
    genus += (n - 1) * tail[j];
  }
  return genus;
}

Integer maximal_genus(const Integer& d, long s) { return genus_from_profile(delta_h(decompose(d, s))); }

Rational closed_form_G(const ExtremalParams& p) {
  const Rational d(p.d);
  const Rational m(p.m);
  const Rational w(p.w);
  const Rational v(p.v);
  const Rational eps(p.eps);
  const Rational delta(p.delta);
  Rational rho;
  if (p.eps < p.w * (4 - p.v)) {
    rho = -delta / 2 * (w - delta);
  } else {
    rho = eps / 2 - w / 2 * (3 - v) - delta / 2 * (w - delta + 1);
  }
  Rational g = 1 + d / 2 * (m + w - 2) - (m + 1) / 2 * (w - 3) + v * m / 2 * (w + 1) + rho;
  g.canonicalize();
  return g;
}

Integer residual_dimension(const ExtremalParams& p, long i) {
  if (i < 0 || i > p.w) {
    throw ParameterError("residual_dimension: i must lie in [0, w] = [0, " + std::to_string(p.w) + "], got " +
                         std::to_string(i));
  }
  const DeltaHProfile profile = delta_h(p);
  // r runs over m+w-i+1 .. m+w+e, i.e. tail positions j = w-i+1 .. w+e
  Integer total = 0;
  const auto& tail = profile.tail();
  for (long j = p.w - i + 1; j <= static_cast<long>(tail.size()); ++j) {
    total += tail[static_cast<std::size_t>(j - 1)];
  }
  return total;
}

Integer castelnuovo_p4(long s) {
  if (s < 4) {
    throw ParameterError("castelnuovo_p4: s must be at least 4");
  }
  Integer total = 0;
  for (long n = 1; 3 * n + 1 < s; ++n) {
    total += s - (3 * n + 1);
  }
  return total;
}

Integer castelnuovo_p4_printed(long s) {
  if (s < 4) {
    throw ParameterError("castelnuovo_p4_printed: s must be at least 4");
  }
  const long w = (s - 1) / 3;
  const long v = (s - 1) % 3;
  return Integer(w * (w - 1) * (w - 2) / 2 + w * v);
}

std::vector<long> MSpec::resolve(long w) const {
  std::set<long> values(absolute.begin(), absolute.end());
  for (long offset : w_offsets) values.insert(w + offset);
  return {values.begin(), values.end()};
}

namespace {

struct MTerm {
  bool relative;
  long value;
};

MTerm parse_m_term(std::string token) {
  token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
  if (token.empty()) {
    throw ParseError("empty m term");
  }
  try {
    if (token[0] == 'w') {
      if (token.size() == 1) return {true, 0};
      std::size_t used = 0;
      const long offset = std::stol(token.substr(1), &used);
      if (used != token.size() - 1) throw ParseError("trailing characters");
      return {true, offset};
    }
    std::size_t used = 0;
    const long value = std::stol(token, &used);
    if (used != token.size()) throw ParseError("trailing characters");
    return {false, value};
  } catch (const std::logic_error&) {
    throw ParseError("cannot parse m term '" + token + "' (expected N or w+N)");
  }
}

}  // namespace

MSpec MSpec::parse(const std::string& text) {
  MSpec spec;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      const MTerm t = parse_m_term(item);
      (t.relative ? spec.w_offsets : spec.absolute).push_back(t.value);
      continue;
    }
    const MTerm lo = parse_m_term(item.substr(0, dots));
    const MTerm hi = parse_m_term(item.substr(dots + 2));
    if (lo.relative != hi.relative || lo.value > hi.value) {
      throw ParseError("bad m range '" + item + "'");
    }
    for (long x = lo.value; x <= hi.value; ++x) {
      (lo.relative ? spec.w_offsets : spec.absolute).push_back(x);
    }
  }
  if (spec.absolute.empty() && spec.w_offsets.empty()) {
    throw ParseError("empty m specification");
  }
  return spec;
}

std::vector<GridCell> grid_cells(long s_min, long s_max, const MSpec& m_spec) {
  if (s_min < 4 || s_max < s_min) {
    throw ParameterError("grid: need 4 <= s_min <= s_max");
  }
  std::vector<GridCell> cells;
  for (long s = s_min; s <= s_max; ++s) {
    const long w = (s - 1) / 3;
    for (long m : m_spec.resolve(w)) {
      if (m < w || m < 1) continue;
      for (long eps = 0; eps < s; ++eps) {
        cells.push_back({s, eps, m});
      }
    }
  }
  return cells;
}

DiscrepancyReport compare_closed_forms(const std::vector<GridCell>& cells) {
  DiscrepancyReport report;
  std::set<long> seen_s;
  for (const GridCell& cell : cells) {
    const ExtremalParams p = decompose(cell.degree(), cell.s);
    const Integer summed = genus_from_profile(delta_h(p));
    const Rational printed = closed_form_G(p);
    ++report.cells_compared;
    if (printed.get_den() != 1) ++report.non_integer_printed;
    if (printed == Rational(summed)) {
      ++report.cells_agreeing;
    } else {
      report.closed_form.push_back({cell, p, printed, summed});
    }
    if (seen_s.insert(cell.s).second) {
      ++report.s_compared;
      const Integer a = castelnuovo_p4_printed(cell.s);
      const Integer b = castelnuovo_p4(cell.s);
      if (a != b) report.castelnuovo.push_back({cell.s, a, b});
    }
  }
  return report;
}

}  // namespace maxgenus::bounds
