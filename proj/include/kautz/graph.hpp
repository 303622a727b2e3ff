#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kautz/word.hpp"

namespace kautz {

/// An edge u -> v of K(d, D) given by its edge-word a_0 ... a_D, with
/// u = a_0 ... a_{D-1} and v = a_1 ... a_D.
class KautzEdge {
 public:
  /// Ternary words are embedded into the (d+1)-letter alphabet.
  KautzEdge(int d, std::size_t diameter, const KautzWord& word);
  static KautzEdge parse(int d, std::size_t diameter, std::string_view digits);

  int d() const noexcept { return d_; }
  std::size_t diameter() const noexcept { return diameter_; }
  const KautzWord& word() const noexcept { return word_; }
  KautzWord tail() const { return word_.subword(0, diameter_); }
  KautzWord head() const { return word_.subword(1, diameter_); }
  /// The same edge read backwards: an edge of the reversed-walk picture.
  KautzEdge reversed() const { return {d_, diameter_, word_.reversed()}; }

 private:
  int d_;
  std::size_t diameter_;
  KautzWord word_;
};

std::size_t overlap(const KautzWord& u, const KautzWord& v);
std::size_t distance(const KautzWord& u, const KautzWord& v);
/// The unique shortest walk-word from u to v: u followed by the last
/// dist(u, v) letters of v.
KautzWord geodesic(const KautzWord& u, const KautzWord& v);

/// K(d, D) materialized with vertices as base-(d+1) codes. Immutable after
/// construction.
class ExplicitDigraph {
 public:
  static constexpr std::size_t kDefaultVertexCap = 10'000'000;

  int d() const noexcept { return d_; }
  std::size_t diameter() const noexcept { return diameter_; }
  std::size_t vertex_count() const noexcept { return codes_.size(); }
  std::size_t edge_count() const noexcept { return codes_.size() * d_; }

  KautzWord vertex(std::size_t index) const;
  std::size_t index_of(const KautzWord& vertex) const;  // throws if absent
  /// Successor indices of `index`, in increasing order of appended letter.
  std::span<const std::uint32_t> successors(std::size_t index) const {
    return {adjacency_.data() + index * d_, static_cast<std::size_t>(d_)};
  }
  std::span<const std::uint32_t> predecessors(std::size_t index) const {
    return {reverse_.data() + index * d_, static_cast<std::size_t>(d_)};
  }

 private:
  friend ExplicitDigraph build_explicit(int, std::size_t, std::size_t);

  int d_ = 0;
  std::size_t diameter_ = 0;
  std::vector<std::uint64_t> codes_;  // sorted
  std::vector<std::uint32_t> adjacency_;
  std::vector<std::uint32_t> reverse_;
};

ExplicitDigraph build_explicit(
    int d, std::size_t diameter,
    std::size_t vertex_cap = ExplicitDigraph::kDefaultVertexCap);

}  // namespace kautz
