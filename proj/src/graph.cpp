#include "kautz/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "kautz/error.hpp"
#include "kautz/oracle.hpp"

namespace kautz {

KautzEdge::KautzEdge(int d, std::size_t diameter, const KautzWord& word)
    : d_(d), diameter_(diameter), word_(word.embedded(d + 1)) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "outdegree d must be >= 2");
  if (diameter < 1) throw Error(ErrorCode::InvalidArgument, "diameter must be >= 1");
  if (word.size() != diameter + 1) {
    throw Error(ErrorCode::LengthMismatch,
                "edge-word " + word.str() + " must have D+1 = " +
                    std::to_string(diameter + 1) + " letters");
  }
}

KautzEdge KautzEdge::parse(int d, std::size_t diameter, std::string_view digits) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "outdegree d must be >= 2");
  return {d, diameter, KautzWord::parse(digits, d + 1)};
}

std::size_t overlap(const KautzWord& u, const KautzWord& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::LengthMismatch, "overlap needs equal-length vertices");
  }
  auto a = u.letters();
  auto b = v.letters();
  const std::size_t n = a.size();
  for (std::size_t j = n; j > 0; --j) {
    if (std::equal(a.end() - static_cast<std::ptrdiff_t>(j), a.end(), b.begin())) {
      return j;
    }
  }
  return 0;
}

std::size_t distance(const KautzWord& u, const KautzWord& v) {
  return u.size() - overlap(u, v);
}

KautzWord geodesic(const KautzWord& u, const KautzWord& v) {
  const std::size_t dist = distance(u, v);
  std::vector<Symbol> letters(u.letters().begin(), u.letters().end());
  auto tail = v.letters().last(dist);
  letters.insert(letters.end(), tail.begin(), tail.end());
  return validate_kautz(letters, std::max(u.alphabet_size(), v.alphabet_size()));
}

namespace {

std::uint64_t encode(std::span<const Symbol> letters, int base) {
  std::uint64_t code = 0;
  for (Symbol s : letters) code = code * static_cast<std::uint64_t>(base) + s;
  return code;
}

}  // namespace

KautzWord ExplicitDigraph::vertex(std::size_t index) const {
  std::vector<Symbol> letters(diameter_);
  std::uint64_t code = codes_.at(index);
  const auto base = static_cast<std::uint64_t>(d_ + 1);
  for (std::size_t i = diameter_; i-- > 0;) {
    letters[i] = static_cast<Symbol>(code % base);
    code /= base;
  }
  return validate_kautz(letters, d_ + 1);
}

std::size_t ExplicitDigraph::index_of(const KautzWord& vertex) const {
  if (vertex.size() != diameter_) {
    throw Error(ErrorCode::LengthMismatch, "vertex length differs from D");
  }
  const std::uint64_t code = encode(vertex.letters(), d_ + 1);
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) {
    throw Error(ErrorCode::EdgeNotInGraph, "vertex " + vertex.str() + " not in graph");
  }
  return static_cast<std::size_t>(it - codes_.begin());
}

ExplicitDigraph build_explicit(int d, std::size_t diameter, std::size_t vertex_cap) {
  if (d < 2 || diameter < 1) {
    throw Error(ErrorCode::InvalidArgument, "need d >= 2 and D >= 1");
  }
  const auto base = static_cast<std::uint64_t>(d + 1);
  long double vertices = static_cast<long double>(d + 1);
  long double span_size = static_cast<long double>(base);
  for (std::size_t i = 1; i < diameter; ++i) {
    vertices *= d;
    span_size *= static_cast<long double>(base);
  }
  if (vertices > static_cast<long double>(vertex_cap) ||
      vertices > std::numeric_limits<std::uint32_t>::max() ||
      span_size > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / base)) {
    throw Error(ErrorCode::TooLarge,
                "K(" + std::to_string(d) + "," + std::to_string(diameter) +
                    ") has more vertices than the cap of " + std::to_string(vertex_cap));
  }

  ExplicitDigraph g;
  g.d_ = d;
  g.diameter_ = diameter;
  g.codes_.reserve(static_cast<std::size_t>(vertices));
  std::vector<Symbol> letters;
  letters.reserve(diameter);
  // Depth-first in letter order keeps the codes sorted.
  auto walk = [&](auto&& self) -> void {
    if (letters.size() == diameter) {
      g.codes_.push_back(encode(letters, d + 1));
      return;
    }
    for (Symbol c = 0; c <= d; ++c) {
      if (!letters.empty() && letters.back() == c) continue;
      letters.push_back(c);
      self(self);
      letters.pop_back();
    }
  };
  walk(walk);

  std::uint64_t high = 1;  // base^(D-1)
  for (std::size_t i = 1; i < diameter; ++i) high *= base;
  const std::size_t n = g.codes_.size();
  g.adjacency_.resize(n * d);
  std::vector<std::uint32_t> in_count(n, 0);
  g.reverse_.resize(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t code = g.codes_[i];
    const std::uint64_t last = code % base;
    std::size_t slot = 0;
    for (std::uint64_t c = 0; c < base; ++c) {
      if (c == last) continue;
      const std::uint64_t next = (code % high) * base + c;
      auto it = std::lower_bound(g.codes_.begin(), g.codes_.end(), next);
      const auto j = static_cast<std::uint32_t>(it - g.codes_.begin());
      g.adjacency_[i * d + slot++] = j;
      g.reverse_[static_cast<std::size_t>(j) * d + in_count[j]++] =
          static_cast<std::uint32_t>(i);
    }
  }
  return g;
}

LayerTable oracle_congestion(const ExplicitDigraph& graph, const KautzEdge& edge) {
  if (edge.d() != graph.d() || edge.diameter() != graph.diameter()) {
    throw Error(ErrorCode::EdgeNotInGraph, "edge is from a different K(d,D)");
  }
  const std::size_t tail = graph.index_of(edge.tail());
  const std::size_t head = graph.index_of(edge.head());
  auto succ = graph.successors(tail);
  if (std::find(succ.begin(), succ.end(), head) == succ.end()) {
    throw Error(ErrorCode::EdgeNotInGraph, edge.word().str() + " is not an edge");
  }

  const std::size_t n = graph.vertex_count();
  const std::size_t diameter = graph.diameter();
  std::vector<std::vector<Count>> rows(diameter);
  for (std::size_t k = 1; k <= diameter; ++k) rows[k - 1].assign(k, 0);

  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent(n);
  std::vector<std::uint32_t> dist(n);
  std::deque<std::uint32_t> queue;
  std::vector<std::uint32_t> path;
  for (std::size_t source = 0; source < n; ++source) {
    std::fill(parent.begin(), parent.end(), kUnseen);
    parent[source] = static_cast<std::uint32_t>(source);
    dist[source] = 0;
    queue.assign(1, static_cast<std::uint32_t>(source));
    while (!queue.empty()) {
      const std::uint32_t x = queue.front();
      queue.pop_front();
      for (std::uint32_t y : graph.successors(x)) {
        if (parent[y] != kUnseen) continue;
        parent[y] = x;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    for (std::size_t target = 0; target < n; ++target) {
      if (target == source) continue;
      if (parent[target] == kUnseen) {
        throw Error(ErrorCode::InvariantViolation, "K(d,D) is not strongly connected");
      }
      path.clear();
      for (auto x = static_cast<std::uint32_t>(target); x != source; x = parent[x]) {
        path.push_back(x);
      }
      path.push_back(static_cast<std::uint32_t>(source));
      std::reverse(path.begin(), path.end());
      const std::size_t k = dist[target];
      if (k > diameter) {
        throw Error(ErrorCode::InvariantViolation, "distance exceeds the diameter");
      }
      for (std::size_t pos = 1; pos < path.size(); ++pos) {
        if (path[pos - 1] == tail && path[pos] == head) ++rows[k - 1][pos - 1];
      }
    }
  }
  return LayerTable(graph.d(), diameter, std::move(rows));
}

}  // namespace kautz
