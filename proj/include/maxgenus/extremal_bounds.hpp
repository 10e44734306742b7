#pragma once

// Numerical characters of extremal curves in P^5: the (m, eps, w, v, k, delta, e) decomposition
// of (d, s), the h-vector Delta h of a general hyperplane section, and the maximal genus
// G(d, 5, s) obtained by summing it.

#include <cstdint>
#include <string>
#include <vector>

#include "maxgenus/numeric.hpp"

namespace maxgenus::bounds {

struct ExtremalParams {
  Integer d;      // degree of C
  long s = 0;     // degree of the minimal surface
  Integer m;      // d - 1 = s m + eps
  long eps = 0;   // 0 <= eps <= s - 1
  long w = 0;     // s - 1 = 3w + v
  long v = 0;     // 0, 1, 2
  long k = 0;     // 0..3
  long delta = 0;
  long e = 0;     // 0 when eps < w(4 - v), else 1

  /// deg C' = s(m+1) - d = s - eps - 1.
  long residual_degree() const { return s - eps - 1; }

  friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;
};

/// Euclidean divisions d - 1 = s m + eps, s - 1 = 3w + v, then eps = k w + delta (first branch)
/// or eps + 3 - v = k(w + 1) + delta (second branch). Requires s >= 4 and d > s.
ExtremalParams decompose(const Integer& d, long s);

/// d > (2s/3) (24 s)^(11/6), decided by (3d)^6 > (2s)^6 (24 s)^11.
bool admissible(const Integer& d, long s);

/// Least d for which admissible(d, s) holds.
Integer admissibility_threshold(long s);

/// Delta h(0 .. m+w+e). The middle run of value s is stored by its bounds so that profiles for
/// astronomically large d stay small.
class DeltaHProfile {
 public:
  DeltaHProfile(long s, Integer m, long w, std::vector<long> head, std::vector<long> tail);

  /// Index of the last nonzero entry, m + w + e.
  Integer last_index() const;
  /// Delta h(n); zero outside 0 .. m+w+e.
  long at(const Integer& n) const;
  Integer sum() const;

  const std::vector<long>& head() const { return head_; }  // n = 0 .. w
  long plateau_value() const { return s_; }                // n = w+1 .. m
  Integer plateau_length() const { return m_ - w_; }
  const std::vector<long>& tail() const { return tail_; }  // n = m+1 .. m+w+e
  const Integer& m() const { return m_; }
  long w() const { return w_; }

  /// Every entry as a vector; throws ParameterError if the profile is longer than max_length.
  std::vector<long> values(std::size_t max_length = 10'000'000) const;

 private:
  long s_;
  Integer m_;
  long w_;
  std::vector<long> head_;
  std::vector<long> tail_;
};

/// The h-vector forced on a general hyperplane section of an extremal curve. Requires m >= w.
/// Throws ConsistencyError if the entries do not sum to d.
DeltaHProfile delta_h(const ExtremalParams& params);

/// G(d, 5, s) = sum_{n >= 2} (n - 1) Delta h(n), the genus of an ACM curve with this h-vector.
Integer genus_from_profile(const DeltaHProfile& profile);

/// Shorthand for genus_from_profile(delta_h(decompose(d, s))).
Integer maximal_genus(const Integer& d, long s);

/// The printed closed-form expression 1 + d/2 (m+w-2) - (m+1)/2 (w-3) + vm/2 (w+1) + rho,
/// evaluated exactly. Kept for comparison only; it is not always an integer.
Rational closed_form_G(const ExtremalParams& params);

/// sum_{r > m+w-i} Delta h(r), the lower bound for h^0(I_{C''|X}(iH + R)); 0 <= i <= w.
Integer residual_dimension(const ExtremalParams& params, long i);

/// Genus of a Castelnuovo curve of degree s in P^4: sum_{n >= 1} (s - min(3n + 1, s)).
Integer castelnuovo_p4(long s);

/// The printed expression w(w-1)(w-2)/2 + wv, kept for comparison with castelnuovo_p4.
Integer castelnuovo_p4_printed(long s);

/// Which values of m to visit for each s: absolute values and offsets from w, deduplicated.
struct MSpec {
  std::vector<long> absolute;
  std::vector<long> w_offsets;

  /// Sorted, deduplicated m values for the given w.
  std::vector<long> resolve(long w) const;
  /// Parses "10", "w+5", "w+2..w+6", "10..12", comma-separated combinations.
  static MSpec parse(const std::string& text);
};

/// One (s, eps, m) cell with d = s m + eps + 1.
struct GridCell {
  long s;
  long eps;
  long m;
  Integer degree() const { return Integer(s) * m + eps + 1; }
};

/// All cells for s in [s_min, s_max], eps in [0, s-1] and m in m_spec, ordered by (s, m, eps).
/// Cells with m < w are left out (the profile needs m >= w), as are cells with d <= s.
std::vector<GridCell> grid_cells(long s_min, long s_max, const MSpec& m_spec);

struct ClosedFormDifference {
  GridCell cell;
  ExtremalParams params;
  Rational printed;
  Integer summed;
};

struct CastelnuovoDifference {
  long s;
  Integer printed;
  Integer summed;
};

/// Itemised comparison of the printed closed forms against the profile summations.
struct DiscrepancyReport {
  std::size_t cells_compared = 0;
  std::size_t cells_agreeing = 0;
  std::size_t non_integer_printed = 0;
  std::vector<ClosedFormDifference> closed_form;
  std::size_t s_compared = 0;
  std::vector<CastelnuovoDifference> castelnuovo;
};

DiscrepancyReport compare_closed_forms(const std::vector<GridCell>& cells);

}  // namespace maxgenus::bounds
