#pragma once

#include <cstddef>
#include <vector>

#include "kautz/numeric.hpp"

namespace kautz {

/// N(e; k, t) for 1 <= t <= k <= D, the number of distance-k ordered pairs
/// whose geodesic uses the edge at position t.
///
/// Construction checks the per-entry cap N(k,t) <= d^(k-1) and the trimming
/// chain U_{k-1} >= (k-1)/(d k) U_k; a violation throws InvariantViolation.
class LayerTable {
 public:
  /// `rows[k-1]` holds the k entries of layer k.
  LayerTable(int d, std::size_t diameter, std::vector<std::vector<Count>> rows);

  int d() const noexcept { return d_; }
  std::size_t diameter() const noexcept { return diameter_; }
  Count n(std::size_t k, std::size_t t) const { return rows_.at(k - 1).at(t - 1); }
  const std::vector<Count>& layer(std::size_t k) const { return rows_.at(k - 1); }
  Count u(std::size_t k) const;
  Count cong() const;

  friend bool operator==(const LayerTable&, const LayerTable&) = default;

 private:
  int d_;
  std::size_t diameter_;
  std::vector<std::vector<Count>> rows_;
};

/// U_k >= (k/D) d^-(D-k) U_D for every k, in exact arithmetic.
bool telescoped_bound_holds(const LayerTable& table);
/// U_{k-1} >= (k-1)/(d k) U_k for every k >= 2, in exact arithmetic.
bool trimming_chain_holds(const LayerTable& table);

}  // namespace kautz
