#include "d2graph/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace d2g {

namespace {

void require_nonempty(const Graph& g, const char* what) {
  if (g.order() == 0) {
    throw Error(ErrorCode::empty_graph,
                std::string(what) + " is undefined for the empty graph");
  }
}

/// Bit-parallel BFS ball: visits everything reachable from `source`, calling
/// `level(frontier, dist)` once per level (frontier includes the source at
/// dist 0). Returns the visited set.
template <typename F>
VertexSet bfs_levels(const Graph& g, int source, F&& level) {
  int n = g.order();
  VertexSet visited(n);
  VertexSet frontier(n);
  frontier.set(source);
  visited.set(source);
  int dist = 0;
  while (!frontier.empty()) {
    level(frontier, dist);
    VertexSet next(n);
    for_each_member(frontier, [&](int v) {
      auto next_words = next.words();
      auto row = g.row(v);
      for (std::size_t i = 0; i < row.size(); ++i) next_words[i] |= row[i];
    });
    next -= visited;
    visited |= next;
    frontier = std::move(next);
    ++dist;
  }
  return visited;
}

}  // namespace

Partition Partition::singletons(int n) {
  Partition p;
  p.classes.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int v = 0; v < n; ++v) p.classes.push_back({v});
  return p;
}

void Partition::canonicalize() {
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
}

int Partition::total() const {
  int t = 0;
  for (const auto& cls : classes) t += static_cast<int>(cls.size());
  return t;
}

bool Partition::is_partition_of(int n) const {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& cls : classes) {
    if (cls.empty()) return false;
    for (int v : cls) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return total() == n;
}

std::vector<int> Partition::index_map(int n) const {
  if (!is_partition_of(n)) {
    throw Error(ErrorCode::partition_mismatch,
                "classes do not partition the vertex set");
  }
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < class_count(); ++c) {
    for (int v : classes[static_cast<std::size_t>(c)]) {
      idx[static_cast<std::size_t>(v)] = c;
    }
  }
  return idx;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  int n = g.order();
  if (source < 0 || source >= n) {
    throw Error(ErrorCode::index_out_of_range,
                "BFS source outside vertex range");
  }
  std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
  bfs_levels(g, source, [&](const VertexSet& frontier, int d) {
    for_each_member(frontier,
                    [&](int v) { dist[static_cast<std::size_t>(v)] = d; });
  });
  return dist;
}

Partition connected_components(const Graph& g) {
  require_nonempty(g, "component structure");
  int n = g.order();
  VertexSet remaining = VertexSet::full(n);
  Partition p;
  while (!remaining.empty()) {
    int start = remaining.first();
    VertexSet comp = bfs_levels(g, start, [](const VertexSet&, int) {});
    p.classes.push_back(comp.to_vector());
    remaining -= comp;
  }
  return p;
}

bool is_connected(const Graph& g) {
  require_nonempty(g, "connectivity");
  VertexSet reached = bfs_levels(g, 0, [](const VertexSet&, int) {});
  return reached.count() == g.order();
}

int diameter(const Graph& g) {
  require_nonempty(g, "diameter");
  int n = g.order();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, s);
    for (int v = 0; v < n; ++v) {
      if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
        throw Error(ErrorCode::disconnected,
                    "diameter is undefined for a disconnected graph");
      }
      best = std::max(best, dist[static_cast<std::size_t>(v)]);
    }
  }
  return best;
}

bool is_complete(const Graph& g) {
  std::int64_t n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool diameter_at_most_two(const Graph& g) {
  int n = g.order();
  int words = g.word_count();
  VertexSet ball(n);
  const VertexSet everything = VertexSet::full(n);
  for (int v = 0; v < n; ++v) {
    ball.clear();
    auto ball_words = ball.words();
    auto row = g.row(v);
    for (int w = 0; w < words; ++w) ball_words[w] = row[w];
    ball.set(v);
    for_each_bit(row, [&](int u) {
      auto urow = g.row(u);
      for (int w = 0; w < words; ++w) ball_words[w] |= urow[w];
    });
    if (!(ball == everything)) return false;
  }
  return true;
}

BipartitenessResult bipartite_certificate(const Graph& g) {
  require_nonempty(g, "bipartiteness");
  int n = g.order();
  std::vector<std::uint8_t> side(static_cast<std::size_t>(n), 2);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  side[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    int conflict = -1;
    for_each_bit(g.row(v), [&](int u) {
      if (side[static_cast<std::size_t>(u)] == 2) {
        side[static_cast<std::size_t>(u)] =
            static_cast<std::uint8_t>(1 - side[static_cast<std::size_t>(v)]);
        parent[static_cast<std::size_t>(u)] = v;
        queue.push_back(u);
      } else if (side[static_cast<std::size_t>(u)] ==
                     side[static_cast<std::size_t>(v)] &&
                 conflict < 0) {
        conflict = u;
      }
    });
    if (conflict >= 0) {
      // Root-to-v path, the conflicting edge, then the path back: the two
      // endpoints sit on the same side so the closed walk has odd length.
      std::vector<int> up;
      for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) {
        up.push_back(x);
      }
      std::vector<int> walk(up.rbegin(), up.rend());
      for (int x = conflict; x != -1; x = parent[static_cast<std::size_t>(x)]) {
        walk.push_back(x);
      }
      return {OddClosedWalk(std::move(walk))};
    }
  }
  if (static_cast<int>(queue.size()) != n) {
    throw Error(ErrorCode::disconnected,
                "bipartiteness certificate requires a connected graph");
  }
  return {TwoColoring{std::move(side)}};
}

Partition complement_components(const Graph& g) {
  require_nonempty(g, "complement component structure");
  int n = g.order();
  // Doubly linked list of unvisited vertices; a BFS step over a vertex v
  // removes every unvisited complement-neighbor (non-neighbor of v) in one
  // sweep, so each scan either removes a vertex or crosses an edge of g.
  std::vector<int> next(static_cast<std::size_t>(n) + 1);
  std::vector<int> prev(static_cast<std::size_t>(n) + 1);
  const int head = n;
  for (int v = 0; v <= n; ++v) {
    next[static_cast<std::size_t>(v)] = v + 1 <= n ? v + 1 : head;
    prev[static_cast<std::size_t>(v)] = v - 1 >= 0 ? v - 1 : head;
  }
  next[head] = 0;
  prev[0] = head;
  auto unlink = [&](int v) {
    next[static_cast<std::size_t>(prev[static_cast<std::size_t>(v)])] =
        next[static_cast<std::size_t>(v)];
    prev[static_cast<std::size_t>(next[static_cast<std::size_t>(v)])] =
        prev[static_cast<std::size_t>(v)];
  };

  Partition p;
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  while (next[head] != head) {
    int start = next[head];
    unlink(start);
    queue.clear();
    queue.push_back(start);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int v = queue[q];
      auto row = g.row(v);
      for (int u = next[head]; u != head;) {
        int following = next[static_cast<std::size_t>(u)];
        if (((row[u >> 6] >> (u & 63)) & 1) == 0) {
          unlink(u);
          queue.push_back(u);
        }
        u = following;
      }
    }
    std::sort(queue.begin(), queue.end());
    p.classes.emplace_back(queue.begin(), queue.end());
  }
  p.canonicalize();
  return p;
}

}  // namespace d2g
