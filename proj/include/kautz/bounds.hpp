#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "kautz/graph.hpp"
#include "kautz/numeric.hpp"
#include "kautz/word.hpp"

namespace kautz {

/// tau(d, D) = (D-1) d^(D-2) + D d^(D-1), the regular-routing makespan.
Count makespan_tau(int d, std::size_t diameter);

/// Which end of the edge-word the admissible-overlap sets are read from.
/// `reversed` reads the reversed word, which accounts for positions in the
/// right half of the walk; `two_sided_max` keeps the larger weight of the two.
enum class Side { forward, reversed, two_sided_max };

struct SparsityReport {
  KautzEdge edge;
  Side side = Side::forward;
  Side realized = Side::forward;  // forward or reversed; the side behind `omega`
  std::map<std::size_t, AdmissibleOverlapSet> per_position;  // of `realized`
  Rational omega_forward;
  Rational omega_reversed;
  Rational omega;        // Omega_d(e) for `side`
  Rational delta_bound;  // 2 d^(D-1) omega
  std::optional<bool> sufficiency;  // omega < (D-3)/8, only for d = 2, D > 3
};

/// Sum over t <= ceil((D+1)/2) and r in R_t of d^-(r-t). Requires an
/// unbordered, square-free edge-word.
Rational omega_d(const KautzWord& word, int d);

SparsityReport weighted_sparsity(const KautzEdge& edge, Side side = Side::forward);

/// Certificate that cong(e) > tau(2, D) without enumeration. Uses the
/// two-sided weight unless another side is asked for.
bool sufficiency_check(const KautzEdge& edge, Side side = Side::two_sided_max);

struct BoundCertificate {
  Count ud = 0;
  Rational cong_lower;  // (d/(d-1)) (1 - 1/(D(d-1))) U_D
  Count tau = 0;
  bool beats_tau = false;
  Rational c_d;
  std::size_t d0 = 0;
};

BoundCertificate cong_lower_bound(Count ud, int d, std::size_t diameter);

struct Thresholds {
  Rational c_d;    // 8/(d-1)
  std::size_t d0;  // ceil((8d^2 + 2d - 1)/(d-1))
};

Thresholds thresholds(int d);

struct UdBound {
  BigInt bound;                    // ceil((D - 2 Omega_d) d^(D-1))
  std::optional<Rational> universal;  // (D - 8/(d-1)) d^(D-1) for 7/4+-free words
};

UdBound ud_lower_bound(const KautzEdge& edge, Side side = Side::two_sided_max);

/// Sum over r in R_t of d^(D-1-r+t): the template bound on Delta_t(e).
Count template_deficit_bound(const KautzWord& word, int d, std::size_t t);

/// (1/(1 - d^-(t+1))) d^(D-1-r0+t) with r0 = min R_t; zero when R_t is empty.
Rational geometric_deficit_bound(const KautzWord& word, int d, std::size_t t);

}  // namespace kautz
