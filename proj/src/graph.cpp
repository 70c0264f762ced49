#include "d2graph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace d2g {

namespace detail {

std::vector<std::uint64_t> zeroed_row_buffer(std::size_t words) {
  std::vector<std::uint64_t> rows;
  rows.reserve(words);
#if defined(__linux__)
  // Past ~32 MB the dominant cost of a fresh buffer is one page fault per
  // 4 KiB page; huge pages cut that by 512x. Must run before first touch.
  constexpr std::size_t kHugeWorth = std::size_t{1} << 22;
  if (words >= kHugeWorth) {
    constexpr std::uintptr_t kPage = 4096;
    auto addr = reinterpret_cast<std::uintptr_t>(rows.data());
    std::uintptr_t aligned = (addr + kPage - 1) & ~(kPage - 1);
    std::size_t skip = aligned - addr;
    std::size_t bytes = words * sizeof(std::uint64_t);
    if (bytes > skip) {
      ::madvise(reinterpret_cast<void*>(aligned), bytes - skip,
                MADV_HUGEPAGE);
    }
  }
#endif
  rows.resize(words, 0);
  return rows;
}

AdjList build_adjacency(const Graph& g) {
  int n = g.order();
  AdjList adj;
  adj.start.assign(static_cast<std::size_t>(n) + 1, 0);
  adj.flat.reserve(static_cast<std::size_t>(2) *
                   static_cast<std::size_t>(g.size()));
  for (int v = 0; v < n; ++v) {
    for_each_bit(g.row(v), [&](int u) { adj.flat.push_back(u); });
    adj.start[static_cast<std::size_t>(v) + 1] =
        static_cast<std::int64_t>(adj.flat.size());
  }
  return adj;
}

}  // namespace detail

namespace {

std::string vertex_str(int v) { return std::to_string(v); }

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::index_out_of_range,
                std::string(what) + " " + vertex_str(v) +
                    " outside vertex range [0, " + vertex_str(n) + ")");
  }
}

}  // namespace

VertexSet::VertexSet(int universe) {
  if (universe < 0) {
    throw Error(ErrorCode::index_out_of_range, "negative universe size");
  }
  n_ = universe;
  w_.assign(word_count_for(universe), 0);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  if (universe > 0) {
    for (auto& w : s.w_) w = ~std::uint64_t{0};
    int spare = static_cast<int>(s.w_.size()) * 64 - universe;
    if (spare > 0) s.w_.back() >>= spare;
  }
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vertices) {
  VertexSet s(universe);
  for (int v : vertices) s.set(v);
  return s;
}

VertexSet VertexSet::from_words(int universe,
                                std::span<const std::uint64_t> words) {
  VertexSet s(universe);
  if (words.size() != s.w_.size()) {
    throw Error(ErrorCode::internal_consistency, "word span length mismatch");
  }
  std::copy(words.begin(), words.end(), s.w_.begin());
  if (!s.w_.empty()) {
    int spare = static_cast<int>(s.w_.size()) * 64 - universe;
    if (spare > 0) s.w_.back() &= ~std::uint64_t{0} >> spare;
  }
  return s;
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : w_) {
    if (w != 0) return false;
  }
  return true;
}

bool VertexSet::test(int v) const {
  if (v < 0 || v >= n_) return false;
  return (w_[v >> 6] >> (v & 63)) & 1;
}

void VertexSet::set(int v) {
  check_vertex(v, n_, "vertex");
  w_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::reset(int v) {
  check_vertex(v, n_, "vertex");
  w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() { std::fill(w_.begin(), w_.end(), 0); }

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

void VertexSet::complement_in_place() {
  if (n_ == 0) return;
  for (auto& w : w_) w = ~w;
  int spare = static_cast<int>(w_.size()) * 64 - n_;
  if (spare > 0) w_.back() &= ~std::uint64_t{0} >> spare;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if ((w_[i] & ~o.w_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if ((w_[i] & o.w_[i]) != 0) return true;
  }
  return false;
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] != 0) return static_cast<int>(i * 64) + __builtin_ctzll(w_[i]);
  }
  return -1;
}

int VertexSet::next_after(int v) const {
  int start = v + 1;
  if (start < 0) start = 0;
  if (start >= n_) return -1;
  std::size_t wi = static_cast<std::size_t>(start) >> 6;
  std::uint64_t w = w_[wi] >> (start & 63);
  if (w != 0) return start + __builtin_ctzll(w);
  for (++wi; wi < w_.size(); ++wi) {
    if (w_[wi] != 0) return static_cast<int>(wi * 64) + __builtin_ctzll(w_[wi]);
  }
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for_each_member(*this, [&](int v) { out.push_back(v); });
  return out;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) {
    throw Error(ErrorCode::index_out_of_range, "negative vertex count");
  }
  int words = word_count_for(n);
  std::vector<std::uint64_t> bits =
      detail::zeroed_row_buffer(static_cast<std::size_t>(n) * words);
  for (auto [u, v] : edges) {
    check_vertex(u, n, "endpoint");
    check_vertex(v, n, "endpoint");
    if (u == v) {
      throw Error(ErrorCode::self_loop,
                  "self-loop at vertex " + vertex_str(u));
    }
    bits[static_cast<std::size_t>(u) * words + (v >> 6)] |= std::uint64_t{1}
                                                            << (v & 63);
    bits[static_cast<std::size_t>(v) * words + (u >> 6)] |= std::uint64_t{1}
                                                            << (u & 63);
  }
  return from_rows(n, std::move(bits));
}

Graph Graph::from_edges(int n,
                        std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(
      n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::vector<std::uint64_t> rows,
                       std::int64_t edge_count) {
  if (n < 0) {
    throw Error(ErrorCode::index_out_of_range, "negative vertex count");
  }
  int words = word_count_for(n);
  if (rows.size() != static_cast<std::size_t>(n) * words) {
    throw Error(ErrorCode::internal_consistency, "row buffer size mismatch");
  }
  std::int64_t total_bits = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t* row = rows.data() + static_cast<std::size_t>(v) * words;
    if ((row[v >> 6] >> (v & 63)) & 1) {
      throw Error(ErrorCode::self_loop,
                  "self-loop at vertex " + vertex_str(v));
    }
    if (edge_count < 0) {
      for (int w = 0; w < words; ++w) total_bits += std::popcount(row[w]);
    }
  }
  if (edge_count >= 0) {
    total_bits = edge_count * 2;
#ifndef NDEBUG
    std::int64_t recount = 0;
    for (const std::uint64_t w : rows) recount += std::popcount(w);
    assert(recount == total_bits && "edge count must match the rows");
#endif
  }
#ifndef NDEBUG
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool uv = (rows[static_cast<std::size_t>(u) * words + (v >> 6)] >>
                 (v & 63)) &
                1;
      bool vu = (rows[static_cast<std::size_t>(v) * words + (u >> 6)] >>
                 (u & 63)) &
                1;
      assert(uv == vu && "adjacency rows must be symmetric");
    }
  }
#endif
  if (total_bits % 2 != 0) {
    throw Error(ErrorCode::internal_consistency, "asymmetric adjacency rows");
  }
  Graph g;
  g.n_ = n;
  g.m_ = total_bits / 2;
  g.words_ = words;
  g.bits_ = std::move(rows);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u, n_, "vertex");
  check_vertex(v, n_, "vertex");
  return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
          (v & 63)) &
         1;
}

int Graph::degree(int v) const {
  check_vertex(v, n_, "vertex");
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  return {bits_.data() + static_cast<std::size_t>(v) * words_,
          static_cast<std::size_t>(words_)};
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v, n_, "vertex");
  return VertexSet::from_words(n_, row(v));
}

Graph complement(const Graph& g) {
  int n = g.order();
  int words = word_count_for(n);
  std::vector<std::uint64_t> rows =
      detail::zeroed_row_buffer(static_cast<std::size_t>(n) * words);
  std::uint64_t last_mask =
      n == 0 ? 0
             : (~std::uint64_t{0} >> (static_cast<std::size_t>(words) * 64 - n));
  for (int v = 0; v < n; ++v) {
    auto src = g.row(v);
    std::uint64_t* dst = rows.data() + static_cast<std::size_t>(v) * words;
    for (int w = 0; w < words; ++w) dst[w] = ~src[w];
    if (words > 0) dst[words - 1] &= last_mask;
    dst[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  return Graph::from_rows(n, std::move(rows));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw Error(ErrorCode::index_out_of_range,
                "vertex set universe does not match graph order");
  }
  if (s.empty()) {
    throw Error(ErrorCode::empty_set, "induced subgraph of the empty set");
  }
  std::vector<int> keep = s.to_vector();
  int k = static_cast<int>(keep.size());
  int words = word_count_for(k);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k) * words, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.has_edge(keep[i], keep[j])) {
        rows[static_cast<std::size_t>(i) * words + (j >> 6)] |=
            std::uint64_t{1} << (j & 63);
        rows[static_cast<std::size_t>(j) * words + (i >> 6)] |=
            std::uint64_t{1} << (i & 63);
      }
    }
  }
  return {Graph::from_rows(k, std::move(rows)), std::move(keep)};
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::self_loop: return "self-loop";
    case ErrorCode::empty_set: return "empty-set";
    case ErrorCode::empty_graph: return "empty-graph";
    case ErrorCode::disconnected: return "disconnected";
    case ErrorCode::diameter_too_small: return "diameter-too-small";
    case ErrorCode::too_large: return "too-large";
    case ErrorCode::bad_header: return "bad-header";
    case ErrorCode::byte_out_of_range: return "byte-out-of-range";
    case ErrorCode::truncated_bitstream: return "truncated-bitstream";
    case ErrorCode::trailing_garbage: return "trailing-garbage";
    case ErrorCode::too_many_tokens: return "too-many-tokens";
    case ErrorCode::partition_mismatch: return "partition-mismatch";
    case ErrorCode::improper_coloring: return "improper-coloring";
    case ErrorCode::wrong_diameter: return "wrong-diameter";
    case ErrorCode::internal_consistency: return "internal-consistency";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace d2g
