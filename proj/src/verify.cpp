#include "d2graph/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "d2graph/io.hpp"

namespace d2g {

namespace {

constexpr int kMaxEnumerationOrder = 7;

void set_why(std::string* why, std::string message) {
  if (why != nullptr) *why = std::move(message);
}

/// Pairs at distance exactly 2 from u, from first principles.
VertexSet distance2_row(const Graph& g, int u) {
  VertexSet two(g.order());
  auto tw = two.words();
  for_each_bit(g.row(u), [&](int v) {
    auto row = g.row(v);
    for (std::size_t w = 0; w < row.size(); ++w) tw[w] |= row[w];
  });
  two -= g.neighbors(u);
  if (two.test(u)) two.reset(u);
  return two;
}

bool partition_covers(const Graph& g, const Partition& p, std::string* why) {
  if (!p.is_partition_of(g.order())) {
    set_why(why, "classes do not partition the vertex set");
    return false;
  }
  return true;
}

}  // namespace

Graph graph_from_mask(int n, std::uint64_t mask) {
  int words = word_count_for(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words, 0);
  int u = 0;
  int v = 1;
  std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  for (std::int64_t k = 0; k < pairs; ++k) {
    if ((mask >> k) & 1) {
      rows[static_cast<std::size_t>(u) * words + (v >> 6)] |= std::uint64_t{1}
                                                              << (v & 63);
      rows[static_cast<std::size_t>(v) * words + (u >> 6)] |= std::uint64_t{1}
                                                              << (u & 63);
    }
    if (++u == v) {
      u = 0;
      ++v;
    }
  }
  return Graph::from_rows(n, std::move(rows));
}

void enumerate_connected_graphs(int n,
                                const std::function<void(const Graph&)>& fn) {
  if (n < 1) {
    throw Error(ErrorCode::index_out_of_range,
                "enumeration needs at least one vertex");
  }
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::too_large,
                "exhaustive enumeration limited to 7 vertices");
  }
  int bits = n * (n - 1) / 2;
  std::uint64_t total = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (is_connected(g)) fn(g);
  }
}

bool validate_component_split(const Graph& g, const ComponentSplit& c,
                              std::string* why) {
  if (!partition_covers(g, c.components, why)) return false;
  if (c.components.class_count() < 2) {
    set_why(why, "component split needs at least two classes");
    return false;
  }
  std::vector<int> idx = c.components.index_map(g.order());
  for (int u = 0; u < g.order(); ++u) {
    VertexSet two = distance2_row(g, u);
    bool bad = false;
    for_each_member(two, [&](int v) {
      if (idx[static_cast<std::size_t>(v)] != idx[static_cast<std::size_t>(u)]) {
        bad = true;
      }
    });
    if (bad) {
      set_why(why, "a distance-2 pair crosses between classes");
      return false;
    }
  }
  return true;
}

bool validate_spanning_bipartite(const Graph& g, const SpanningBipartite& c,
                                 std::string* why) {
  int n = g.order();
  if (c.side_a.universe() != n || c.side_b.universe() != n) {
    set_why(why, "witness universes do not match the graph");
    return false;
  }
  if (c.side_a.empty() || c.side_b.empty()) {
    set_why(why, "witness sides must be nonempty");
    return false;
  }
  if (c.side_a.intersects(c.side_b)) {
    set_why(why, "witness sides overlap");
    return false;
  }
  if (!((c.side_a | c.side_b) == VertexSet::full(n))) {
    set_why(why, "witness sides do not cover the vertex set");
    return false;
  }
  bool complete = true;
  for_each_member(c.side_a, [&](int a) {
    if (!c.side_b.is_subset_of(g.neighbors(a))) complete = false;
  });
  if (!complete) {
    set_why(why, "a cross pair is missing its edge");
    return false;
  }
  return true;
}

bool validate_lifted_coloring(const Graph& g, const LiftedColoring& c,
                              std::string* why) {
  int n = g.order();
  if (c.side0.universe() != n || c.side1.universe() != n) {
    set_why(why, "coloring universes do not match the graph");
    return false;
  }
  if (c.side0.empty() || c.side1.empty()) {
    set_why(why, "both color classes must be nonempty");
    return false;
  }
  if (c.side0.intersects(c.side1) ||
      !((c.side0 | c.side1) == VertexSet::full(n))) {
    set_why(why, "color classes do not partition the vertex set");
    return false;
  }
  for (int u = 0; u < n; ++u) {
    VertexSet two = distance2_row(g, u);
    const VertexSet& other = c.side0.test(u) ? c.side1 : c.side0;
    if (two.intersects(other)) {
      set_why(why, "a distance-2 pair crosses between color classes");
      return false;
    }
  }
  return true;
}

bool validate_odd_walk_in_quotient(const Graph& g, const QuotientGraph& q,
                                   const OddWalkInQuotient& c,
                                   std::string* why) {
  if (!partition_covers(g, q.partition, why)) return false;
  if (static_cast<int>(q.class_of.size()) != g.order()) {
    set_why(why, "class map length does not match the graph");
    return false;
  }
  for (int v = 0; v < g.order(); ++v) {
    int cls = q.class_of[static_cast<std::size_t>(v)];
    if (cls < 0 || cls >= q.partition.class_count() ||
        std::find(q.partition.classes[static_cast<std::size_t>(cls)].begin(),
                  q.partition.classes[static_cast<std::size_t>(cls)].end(),
                  v) ==
            q.partition.classes[static_cast<std::size_t>(cls)].end()) {
      set_why(why, "class map disagrees with the partition");
      return false;
    }
  }
  for (const auto& members : q.partition.classes) {
    VertexSet cls(g.order());
    for (int v : members) cls.set(v);
    if (!is_fine(g, cls).fine) {
      set_why(why, "a quotient class is not a fine set");
      return false;
    }
  }
  if (!(contract(g, q.partition).quotient == q.quotient)) {
    set_why(why, "quotient edges disagree with the contraction");
    return false;
  }
  const auto& walk = c.walk;
  if (walk.size() < 4 || walk.size() % 2 != 0) {
    set_why(why, "walk does not have odd length");
    return false;
  }
  if (walk.front() != walk.back()) {
    set_why(why, "walk is not closed");
    return false;
  }
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    int a = walk[i];
    int b = walk[i + 1];
    if (a < 0 || b < 0 || a >= q.quotient.order() || b >= q.quotient.order() ||
        !q.quotient.has_edge(a, b)) {
      set_why(why, "walk steps off the quotient edges");
      return false;
    }
  }
  return true;
}

bool validate_certificate(const Graph& g, const DecisionOutcome& outcome,
                          std::string* why) {
  int n = g.order();
  bool connected = n > 0 && is_connected(g);
  Branch expected;
  if (n == 1) {
    expected = Branch::trivial_k1;
  } else if (!connected) {
    expected = Branch::disconnected_input;
  } else if (is_complete(g)) {
    expected = Branch::complete_graph;
  } else if (diameter_at_most_two(g)) {
    expected = Branch::diameter_2;
  } else {
    expected = Branch::diameter_3_plus;
  }
  if (outcome.branch != expected) {
    set_why(why, std::string("branch should be ") +
                     std::string(branch_name(expected)));
    return false;
  }

  switch (outcome.branch) {
    case Branch::trivial_k1:
      if (!outcome.d2_connected ||
          !std::holds_alternative<std::monostate>(outcome.certificate)) {
        set_why(why, "one-vertex graphs are connected with no certificate");
        return false;
      }
      return true;
    case Branch::disconnected_input:
    case Branch::complete_graph: {
      const auto* split = std::get_if<ComponentSplit>(&outcome.certificate);
      if (split == nullptr || outcome.d2_connected) {
        set_why(why, "expected a component split with a negative verdict");
        return false;
      }
      return validate_component_split(g, *split, why);
    }
    case Branch::diameter_2: {
      if (outcome.d2_connected) {
        if (!std::holds_alternative<std::monostate>(outcome.certificate)) {
          set_why(why, "positive diameter-2 verdicts carry no certificate");
          return false;
        }
        return true;
      }
      const auto* w = std::get_if<SpanningBipartite>(&outcome.certificate);
      if (w == nullptr) {
        set_why(why, "expected a spanning bipartite witness");
        return false;
      }
      return validate_spanning_bipartite(g, *w, why);
    }
    case Branch::diameter_3_plus: {
      if (!outcome.quotient.has_value()) {
        set_why(why, "diameter-3-plus outcomes must carry the quotient");
        return false;
      }
      if (outcome.d2_connected) {
        const auto* w = std::get_if<OddWalkInQuotient>(&outcome.certificate);
        if (w == nullptr) {
          set_why(why, "expected an odd walk in the quotient");
          return false;
        }
        return validate_odd_walk_in_quotient(g, *outcome.quotient, *w, why);
      }
      const auto* c = std::get_if<LiftedColoring>(&outcome.certificate);
      if (c == nullptr) {
        set_why(why, "expected a lifted coloring");
        return false;
      }
      return validate_lifted_coloring(g, *c, why);
    }
  }
  set_why(why, "unknown branch");
  return false;
}

bool TheoremReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<std::string> TheoremReport::failed_ids() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.pass) out.emplace_back(c.id);
  }
  return out;
}

namespace {

/// All-pairs BFS distances; rows indexed by source.
std::vector<std::vector<int>> all_pairs(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(static_cast<std::size_t>(g.order()));
  for (int s = 0; s < g.order(); ++s) d.push_back(bfs_distances(g, s));
  return d;
}

constexpr int kFullCheckOrderLimit = 512;
constexpr int kBruteFineOrderLimit = 10;

}  // namespace

TheoremReport check_theorems(const Graph& g) {
  return check_theorems(g, decide_d2_connectivity(g));
}

TheoremReport check_theorems(const Graph& g, const DecisionOutcome& outcome) {
  if (g.order() == 0) {
    throw Error(ErrorCode::empty_graph,
                "theorem checks need a nonempty graph");
  }
  TheoremReport report;
  report.graph6 = write_graph6(g);
  report.checks.reserve(13);
  auto add = [&](std::string_view id, bool pass, std::string detail = {}) {
    report.checks.push_back({id, pass, pass ? std::string() : std::move(detail)});
  };

  int n = g.order();
  D2Connectivity oracle = d2_connectivity_oracle(g);
  bool connected = is_connected(g);

  add("oracle-equivalence", outcome.d2_connected == oracle.connected,
      "structural verdict disagrees with the distance-2 components");

  {
    Graph d2 = distance2_graph(g);
    Graph sq = square_graph(g);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      auto dv = d2.row(v);
      auto sv = sq.row(v);
      auto gv = g.row(v);
      for (std::size_t w = 0; w < dv.size(); ++w) {
        if (dv[w] != (sv[w] & ~gv[w])) {
          ok = false;
          break;
        }
      }
    }
    add("d2-edge-identity", ok,
        "distance-2 edges are not the square edges minus the base edges");
  }

  add("complement-components-agreement",
      complement_components(g) == connected_components(complement(g)),
      "implicit and explicit complement components disagree");

  {
    std::string why;
    bool ok = validate_certificate(g, outcome, &why);
    add("certificate-soundness", ok, std::move(why));
  }

  if (connected) {
    {
      bool pass = true;
      std::string detail;
      if (n >= 2) {
        BipartitenessResult bip = bipartite_certificate(g);
        if (bip.bipartite() && oracle.connected) {
          pass = false;
          detail = "bipartite input with a connected distance-2 graph";
        }
      }
      add("bipartite-implies-disconnected", pass, std::move(detail));
    }
    {
      bool pass = true;
      std::string detail;
      FamilyMatch fam = classify_family_member(g);
      if (n >= 2 && n <= 4 && oracle.connected) {
        pass = false;
        detail = "connected graph on at most 4 vertices came out connected";
      }
      if (n == 5 && oracle.connected != (fam.kind != FamilyKind::none)) {
        pass = false;
        detail = "order-5 verdict disagrees with family membership";
      }
      if (fam.kind != FamilyKind::none && !oracle.connected) {
        pass = false;
        detail = "family member came out disconnected";
      }
      add("small-order-rules", pass, std::move(detail));
    }
  }

  int diam = -1;
  std::vector<std::vector<int>> dist;
  if (connected && n <= kFullCheckOrderLimit) {
    dist = all_pairs(g);
    for (const auto& row : dist) {
      for (int d : row) diam = std::max(diam, d);
    }
  } else if (connected) {
    diam = outcome.branch == Branch::diameter_3_plus ? 3
           : outcome.branch == Branch::diameter_2    ? 2
                                                     : 1;
  }

  if (connected && diam == 2) {
    bool split = complement_components(g).class_count() >= 2;
    add("diameter-2-complement-criterion", split == !oracle.connected,
        "complement split disagrees with the distance-2 verdict");
  }

  if (connected && diam >= 3) {
    QuotientGraph q =
        outcome.quotient.has_value() ? *outcome.quotient : hat_graph(g);
    bool partition_ok = q.partition.is_partition_of(n);
    {
      bool ok = partition_ok;
      std::string detail;
      if (!ok) detail = "classes do not partition the vertex set";
      for (std::size_t c = 0; ok && c < q.partition.classes.size(); ++c) {
        VertexSet cls(n);
        for (int v : q.partition.classes[c]) cls.set(v);
        if (!is_fine(g, cls).fine) {
          ok = false;
          detail = "a class is not a fine set";
        }
      }
      if (ok && n <= kBruteFineOrderLimit) {
        std::vector<std::vector<int>> brute;
        for (const VertexSet& s : maximal_fine_sets_bruteforce(g)) {
          brute.push_back(s.to_vector());
        }
        if (brute != q.partition.classes) {
          ok = false;
          detail = "classes disagree with the exhaustive fine-set search";
        }
      }
      add("fine-partition-validity", ok, std::move(detail));
    }

    if (partition_ok && static_cast<int>(q.class_of.size()) == n) {
      if (!dist.empty()) {
        auto qdist = all_pairs(q.quotient);
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
          for (int v = u + 1; v < n && ok; ++v) {
            int cu = q.class_of[static_cast<std::size_t>(u)];
            int cv = q.class_of[static_cast<std::size_t>(v)];
            if (cu == cv) {
              ok = dist[static_cast<std::size_t>(u)]
                       [static_cast<std::size_t>(v)] <= 2;
            } else {
              ok = dist[static_cast<std::size_t>(u)]
                       [static_cast<std::size_t>(v)] ==
                   qdist[static_cast<std::size_t>(cu)]
                        [static_cast<std::size_t>(cv)];
            }
          }
        }
        add("distance-preservation", ok,
            "base distances disagree with quotient distances");
        add("quotient-diameter-equality", diameter(q.quotient) == diam,
            "quotient diameter differs from the base diameter");
      }

      add("quotient-idempotence",
          maximal_fine_partition(q.quotient) ==
              Partition::singletons(q.quotient.order()),
          "contracting twice is not the identity");

      add("quotient-d2-equivalence",
          d2_connectivity_oracle(q.quotient).connected == oracle.connected,
          "base and quotient distance-2 connectivity differ");

      add("bipartite-quotient-criterion",
          bipartite_certificate(q.quotient).bipartite() == !oracle.connected,
          "quotient bipartiteness disagrees with the distance-2 verdict");
    }
  }

  return report;
}

bool induced_family_sufficiency(const Graph& g) {
  int n = g.order();
  if (n == 0) {
    throw Error(ErrorCode::empty_graph,
                "family search needs a nonempty graph");
  }
  if (n > 10) {
    throw Error(ErrorCode::too_large,
                "exhaustive family search limited to 10 vertices");
  }
  if (!is_connected(g)) {
    throw Error(ErrorCode::disconnected,
                "family search requires a connected graph");
  }

  auto cycle = [](int k) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
    return Graph::from_edges(k, edges);
  };
  static const Graph c5 = cycle(5);
  static const Graph c7 = cycle(7);
  static const Graph c9 = cycle(9);
  struct Target {
    int k;
    const Graph* shape;
  };
  const std::array<Target, 6> targets = {{{5, &c5},
                                          {5, &bull_graph()},
                                          {5, &house_graph()},
                                          {6, &apex_graph()},
                                          {7, &c7},
                                          {9, &c9}}};

  auto dominated = [&](const VertexSet& s) {
    for (int x = 0; x < n; ++x) {
      VertexSet ball = g.neighbors(x);
      ball.set(x);
      if (s.is_subset_of(ball)) return true;
    }
    return false;
  };

  for (int k : {5, 6, 7, 9}) {
    if (k > n) continue;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet s(n);
      for (int v : pick) s.set(v);
      InducedSubgraph ind = induced_subgraph(g, s);
      for (const Target& t : targets) {
        if (t.k != k || ind.graph.size() != t.shape->size()) continue;
        if (is_isomorphic(ind.graph, *t.shape) && !dominated(s)) return true;
      }
      // next k-combination of {0..n-1}
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(i)] + j - i;
      }
    }
  }
  return false;
}

namespace {

struct Accumulator {
  std::array<std::int64_t, 5> branch{};
  std::int64_t processed = 0;
  std::int64_t connected = 0;
  std::int64_t disconnected = 0;
  std::int64_t d2_connected = 0;
  std::int64_t d2_disconnected = 0;
  std::vector<CensusReport::Failure> failures;

  void absorb(const Graph& g) {
    DecisionOutcome outcome = decide_d2_connectivity(g);
    ++processed;
    ++branch[static_cast<std::size_t>(outcome.branch)];
    if (outcome.d2_connected) {
      ++d2_connected;
    } else {
      ++d2_disconnected;
    }
    if (outcome.branch == Branch::disconnected_input) {
      ++disconnected;
      return;
    }
    ++connected;
    TheoremReport report = check_theorems(g, outcome);
    if (!report.all_pass()) {
      failures.push_back({report.graph6, report.failed_ids()});
    }
  }

  void merge(Accumulator&& o) {
    for (std::size_t i = 0; i < branch.size(); ++i) branch[i] += o.branch[i];
    processed += o.processed;
    connected += o.connected;
    disconnected += o.disconnected;
    d2_connected += o.d2_connected;
    d2_disconnected += o.d2_disconnected;
    failures.insert(failures.end(),
                    std::make_move_iterator(o.failures.begin()),
                    std::make_move_iterator(o.failures.end()));
  }
};

struct MaskTask {
  int n;
  std::uint64_t lo;
  std::uint64_t hi;
};

int resolve_jobs(int jobs, std::size_t task_count) {
  if (jobs <= 0) {
    jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
  }
  if (static_cast<std::size_t>(jobs) > task_count) {
    jobs = static_cast<int>(task_count);
  }
  return std::max(jobs, 1);
}

template <typename TaskFn>
Accumulator run_tasks(std::size_t task_count, int jobs, TaskFn&& run_one) {
  Accumulator total;
  jobs = resolve_jobs(jobs, task_count);
  if (jobs <= 1) {
    for (std::size_t t = 0; t < task_count; ++t) run_one(t, total);
    return total;
  }
  std::atomic<std::size_t> next{0};
  std::vector<Accumulator> parts(static_cast<std::size_t>(jobs));
  std::mutex error_lock;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      try {
        for (std::size_t t = next.fetch_add(1); t < task_count;
             t = next.fetch_add(1)) {
          run_one(t, parts[static_cast<std::size_t>(j)]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> hold(error_lock);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (first_error) std::rethrow_exception(first_error);
  for (auto& part : parts) total.merge(std::move(part));
  return total;
}

CensusReport finalize(Accumulator&& acc,
                      std::chrono::steady_clock::time_point started) {
  CensusReport report;
  for (std::size_t b = 0; b < acc.branch.size(); ++b) {
    if (acc.branch[b] > 0) {
      report.branch_totals[std::string(
          branch_name(static_cast<Branch>(b)))] = acc.branch[b];
    }
  }
  report.graphs_processed = acc.processed;
  report.connected_inputs = acc.connected;
  report.disconnected_inputs = acc.disconnected;
  report.d2_connected = acc.d2_connected;
  report.d2_disconnected = acc.d2_disconnected;
  report.failures = std::move(acc.failures);
  std::sort(report.failures.begin(), report.failures.end(),
            [](const CensusReport::Failure& a, const CensusReport::Failure& b) {
              return std::tie(a.graph6, a.checks) < std::tie(b.graph6, b.checks);
            });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

}  // namespace

CensusReport run_census_range(int min_n, int max_n,
                              const CensusOptions& options) {
  if (min_n < 1 || min_n > max_n) {
    throw Error(ErrorCode::index_out_of_range, "bad census order range");
  }
  if (max_n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::too_large,
                "exhaustive enumeration limited to 7 vertices");
  }
  auto started = std::chrono::steady_clock::now();
  constexpr std::uint64_t kChunk = 4096;
  std::vector<MaskTask> tasks;
  for (int n = min_n; n <= max_n; ++n) {
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t lo = 0; lo < total; lo += kChunk) {
      tasks.push_back({n, lo, std::min(lo + kChunk, total)});
    }
  }
  Accumulator acc =
      run_tasks(tasks.size(), options.jobs, [&](std::size_t t, Accumulator& a) {
        const MaskTask& task = tasks[t];
        for (std::uint64_t mask = task.lo; mask < task.hi; ++mask) {
          Graph g = graph_from_mask(task.n, mask);
          if (!is_connected(g)) continue;
          a.absorb(g);
        }
      });
  return finalize(std::move(acc), started);
}

CensusReport run_census(const std::vector<Graph>& graphs,
                        const CensusOptions& options) {
  auto started = std::chrono::steady_clock::now();
  constexpr std::size_t kChunk = 64;
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t lo = 0; lo < graphs.size(); lo += kChunk) {
    tasks.push_back({lo, std::min(lo + kChunk, graphs.size())});
  }
  Accumulator acc =
      run_tasks(tasks.size(), options.jobs, [&](std::size_t t, Accumulator& a) {
        for (std::size_t i = tasks[t].first; i < tasks[t].second; ++i) {
          a.absorb(graphs[i]);
        }
      });
  return finalize(std::move(acc), started);
}

}  // namespace d2g
