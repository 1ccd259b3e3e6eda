#ifndef BIDIXGEN_CYCLES_HPP
#define BIDIXGEN_CYCLES_HPP

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "bidixgen/error.hpp"
#include "bidixgen/translation_graph.hpp"

namespace bidixgen {

/// Bounds on the cycles considered around a source word. Lengths count
/// vertices (equal to edges for a cycle).
struct CycleConstraints {
  int min_len = 4;
  int max_len = 6;
  int context_depth = 3;

  /// A cycle through the source never reaches farther than half its length,
  /// so max_len > 2 * context_depth would silently drop every long cycle.
  void validate() const {
    if (min_len < 3) throw Error(ErrorKind::InvalidConstraints, "min_len must be >= 3");
    if (max_len < min_len) throw Error(ErrorKind::InvalidConstraints, "max_len must be >= min_len");
    if (context_depth < 1) throw Error(ErrorKind::InvalidConstraints, "context_depth must be >= 1");
    if (max_len > 2 * context_depth) {
      throw Error(ErrorKind::InvalidConstraints, "max_len must be <= 2 * context_depth");
    }
  }
};

using Cycle = std::vector<VertexId>;

/// Density of a vertex set with `edges` induced edges: 2|E| / (|V|(|V|-1)).
constexpr double induced_density(int edges, int vertices) {
  return 2.0 * edges / (static_cast<double>(vertices) * (vertices - 1));
}

/// Number of graph edges among the given vertices.
inline int induced_edge_count(const TranslationGraph& g, std::span<const VertexId> vertices) {
  int count = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.has_edge(vertices[i], vertices[j])) ++count;
    }
  }
  return count;
}

/// Induced-subgraph density of a simple cycle given as its vertex sequence
/// (without repeating the first vertex). Throws NotACycle otherwise.
inline double cycle_density(const TranslationGraph& g, std::span<const VertexId> cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) throw Error(ErrorKind::NotACycle, "a cycle needs at least 3 vertices");
  std::vector<VertexId> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::NotACycle, "repeated vertex");
  }
  if (sorted.back() >= g.vertex_count()) throw Error(ErrorKind::NotACycle, "vertex id out of range");
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) {
      throw Error(ErrorKind::NotACycle, "missing edge between consecutive vertices");
    }
  }
  return induced_density(induced_edge_count(g, cycle), static_cast<int>(k));
}

/// Enumerates constrained simple cycles through a source vertex.
///
/// Bounded DFS over the source's context ball. A partial path is dropped as
/// soon as its tip is too far from the source to close within max_len. Each
/// cycle is reported once, rotated to start at the source and oriented so
/// that the second vertex has the smaller id of the source's two cycle
/// neighbours.
///
/// Holds per-graph scratch buffers; one instance per thread.
class CycleEnumerator {
 public:
  explicit CycleEnumerator(const TranslationGraph& g)
      : g_(&g), dist_(g.vertex_count(), -1), on_path_(g.vertex_count(), 0) {}

  /// Calls visit(std::span<const VertexId>) for every cycle.
  template <typename Visitor>
  void for_each_cycle(VertexId source, const CycleConstraints& c, Visitor&& visit) {
    c.validate();
    if (source >= g_->vertex_count()) throw Error(ErrorKind::UnknownVertex, "vertex id out of range");
    mark_ball(source, c.context_depth);
    source_ = source;
    min_len_ = c.min_len;
    max_len_ = c.max_len;
    path_.assign(1, source);
    on_path_[source] = 1;
    extend(visit);
    on_path_[source] = 0;
    clear_ball();
  }

  /// Distance from the source of the last traversal, -1 outside the ball.
  /// Valid only inside a visitor.
  int distance(VertexId v) const { return dist_[v]; }

 private:
  void mark_ball(VertexId source, int depth) {
    dist_[source] = 0;
    touched_.assign(1, source);
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      const VertexId v = touched_[head];
      if (dist_[v] == depth) continue;
      for (VertexId w : g_->neighbors(v)) {
        if (dist_[w] < 0) {
          dist_[w] = dist_[v] + 1;
          touched_.push_back(w);
        }
      }
    }
  }

  void clear_ball() {
    for (VertexId v : touched_) dist_[v] = -1;
    touched_.clear();
  }

  template <typename Visitor>
  void extend(Visitor& visit) {
    const int len = static_cast<int>(path_.size());
    const VertexId tip = path_.back();
    for (VertexId w : g_->neighbors(tip)) {
      if (w == source_) {
        if (len >= 3 && len >= min_len_ && path_[1] < tip) visit(std::span<const VertexId>(path_));
        continue;
      }
      const int d = dist_[w];
      if (d < 0 || on_path_[w] || len + 1 > max_len_ || d > max_len_ - len) continue;
      path_.push_back(w);
      on_path_[w] = 1;
      extend(visit);
      on_path_[w] = 0;
      path_.pop_back();
    }
  }

  const TranslationGraph* g_;
  std::vector<int> dist_;
  std::vector<char> on_path_;
  std::vector<VertexId> touched_;
  std::vector<VertexId> path_;
  VertexId source_ = 0;
  int min_len_ = 0;
  int max_len_ = 0;
};

/// All constrained cycles through `source`, canonical and sorted.
inline std::vector<Cycle> enumerate_cycles(const TranslationGraph& g, const LexicalEntry& source,
                                           const CycleConstraints& c) {
  const VertexId s = g.require(source);
  std::vector<Cycle> out;
  CycleEnumerator(g).for_each_cycle(s, c, [&](std::span<const VertexId> cyc) { out.emplace_back(cyc.begin(), cyc.end()); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bidixgen

#endif  // BIDIXGEN_CYCLES_HPP
