#include "d2graph/report.hpp"

#include <sstream>

#include "json.hpp"

namespace d2g {

namespace {

using nlohmann::json;

constexpr int kExactDiameterLimit = 4096;

json label_array(const VertexSet& s, const std::vector<std::string>& labels) {
  json arr = json::array();
  for_each_member(s, [&](int v) {
    arr.push_back(labels[static_cast<std::size_t>(v)]);
  });
  return arr;
}

json partition_to_json(const Partition& p,
                       const std::vector<std::string>& labels) {
  json arr = json::array();
  for (const auto& cls : p.classes) {
    json members = json::array();
    for (int v : cls) members.push_back(labels[static_cast<std::size_t>(v)]);
    arr.push_back(std::move(members));
  }
  return arr;
}

std::vector<std::string> quotient_class_labels(
    const QuotientGraph& q, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  out.reserve(q.partition.classes.size());
  for (const auto& cls : q.partition.classes) {
    out.push_back(class_label(cls, labels));
  }
  return out;
}

json certificate_to_json(const AnalysisReport& r) {
  const auto& labels = r.labels;
  json c;
  if (const auto* split = std::get_if<ComponentSplit>(&r.outcome.certificate)) {
    c["type"] = "component-split";
    c["components"] = partition_to_json(split->components, labels);
  } else if (const auto* w =
                 std::get_if<SpanningBipartite>(&r.outcome.certificate)) {
    c["type"] = "spanning-bipartite";
    c["side_a"] = label_array(w->side_a, labels);
    c["side_b"] = label_array(w->side_b, labels);
  } else if (const auto* lc =
                 std::get_if<LiftedColoring>(&r.outcome.certificate)) {
    c["type"] = "lifted-coloring";
    c["side0"] = label_array(lc->side0, labels);
    c["side1"] = label_array(lc->side1, labels);
  } else if (const auto* w =
                 std::get_if<OddWalkInQuotient>(&r.outcome.certificate)) {
    auto names = quotient_class_labels(*r.outcome.quotient, labels);
    json walk = json::array();
    for (int cls : w->walk) walk.push_back(names[static_cast<std::size_t>(cls)]);
    c["type"] = "odd-walk-in-quotient";
    c["walk"] = std::move(walk);
  } else {
    c["type"] = "none";
  }
  return c;
}

}  // namespace

AnalysisReport analyze_graph(const LabeledGraph& lg,
                             const AnalyzeOptions& options) {
  const Graph& g = lg.graph;
  if (g.order() == 0) {
    throw Error(ErrorCode::empty_graph, "analysis needs at least one vertex");
  }
  AnalysisReport r;
  r.n = g.order();
  r.m = g.size();
  r.labels = lg.labels;
  r.outcome = decide_d2_connectivity(g);
  r.connected = r.outcome.branch != Branch::disconnected_input;
  switch (r.outcome.branch) {
    case Branch::trivial_k1:
      r.diameter = 0;
      break;
    case Branch::complete_graph:
      r.diameter = 1;
      break;
    case Branch::diameter_2:
      r.diameter = 2;
      break;
    case Branch::diameter_3_plus:
      // Contraction preserves distances, so the quotient diameter is exact;
      // very large quotients are skipped rather than spending O(n^2) BFS work.
      if (r.outcome.quotient->quotient.order() <= kExactDiameterLimit) {
        r.diameter = diameter(r.outcome.quotient->quotient);
      }
      break;
    case Branch::disconnected_input:
      break;
  }
  if (options.with_oracle) {
    if (g.order() > options.oracle_max_n) {
      throw Error(ErrorCode::too_large,
                  "oracle cross-check limited to " +
                      std::to_string(options.oracle_max_n) + " vertices");
    }
    r.oracle_agreement =
        d2_connectivity_oracle(g).connected == r.outcome.d2_connected;
  }
  return r;
}

std::string report_json(const AnalysisReport& r) {
  json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["connected"] = r.connected;
  if (r.diameter.has_value()) j["diameter"] = *r.diameter;
  j["branch"] = std::string(branch_name(r.outcome.branch));
  j["d2_connected"] = r.outcome.d2_connected;
  j["certificate"] = certificate_to_json(r);
  if (r.outcome.quotient.has_value()) {
    const QuotientGraph& q = *r.outcome.quotient;
    j["fine_partition"] = partition_to_json(q.partition, r.labels);
    auto names = quotient_class_labels(q, r.labels);
    json edges = json::array();
    for (int a = 0; a < q.quotient.order(); ++a) {
      for_each_bit(q.quotient.row(a), [&](int b) {
        if (b > a) {
          edges.push_back(json::array({names[static_cast<std::size_t>(a)],
                                       names[static_cast<std::size_t>(b)]}));
        }
      });
    }
    j["quotient_edges"] = std::move(edges);
  }
  if (r.oracle_agreement.has_value()) {
    j["oracle_agreement"] = *r.oracle_agreement;
  }
  return j.dump(2) + "\n";
}

namespace {

const char* kGreen = "\x1b[32m";
const char* kRed = "\x1b[31m";
const char* kReset = "\x1b[0m";

std::string verdict(bool value, bool color) {
  std::string word = value ? "yes" : "no";
  if (!color) return word;
  return std::string(value ? kGreen : kRed) + word + kReset;
}

std::string set_text(const VertexSet& s, const std::vector<std::string>& labels) {
  std::vector<int> members = s.to_vector();
  return class_label(members, labels);
}

void append_class_label(std::string& out, const std::vector<int>& members,
                        const std::vector<std::string>& labels) {
  out.push_back('{');
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += labels[static_cast<std::size_t>(members[i])];
  }
  out.push_back('}');
}

}  // namespace

std::string report_text(const AnalysisReport& r, bool color) {
  // Built with plain string appends: on large graphs this report runs to
  // megabytes, where stream insertion overhead is measurable.
  std::string out;
  // Both the odd-walk certificate and the quotient section print class names.
  std::vector<std::string> names;
  if (r.outcome.quotient.has_value()) {
    names = quotient_class_labels(*r.outcome.quotient, r.labels);
  }
  out += "input: n=";
  out += std::to_string(r.n);
  out += " m=";
  out += std::to_string(r.m);
  out += "\nconnected: ";
  out += (r.connected ? "yes" : "no");
  out += '\n';
  if (r.diameter.has_value()) {
    out += "diameter: ";
    out += std::to_string(*r.diameter);
    out += '\n';
  }
  out += "branch: ";
  out += branch_name(r.outcome.branch);
  out += "\ndistance-2 graph connected: ";
  out += verdict(r.outcome.d2_connected, color);
  out += '\n';
  if (const auto* split = std::get_if<ComponentSplit>(&r.outcome.certificate)) {
    out += "certificate: component split\n";
    for (const auto& cls : split->components.classes) {
      out += "  ";
      append_class_label(out, cls, r.labels);
      out += '\n';
    }
  } else if (const auto* w =
                 std::get_if<SpanningBipartite>(&r.outcome.certificate)) {
    out += "certificate: spanning complete bipartite subgraph\n";
    out += "  side a: ";
    out += set_text(w->side_a, r.labels);
    out += "\n  side b: ";
    out += set_text(w->side_b, r.labels);
    out += '\n';
  } else if (const auto* lc =
                 std::get_if<LiftedColoring>(&r.outcome.certificate)) {
    out += "certificate: lifted 2-coloring\n";
    out += "  side 0: ";
    out += set_text(lc->side0, r.labels);
    out += "\n  side 1: ";
    out += set_text(lc->side1, r.labels);
    out += '\n';
  } else if (const auto* w =
                 std::get_if<OddWalkInQuotient>(&r.outcome.certificate)) {
    out += "certificate: odd closed walk in the quotient\n  ";
    for (std::size_t i = 0; i < w->walk.size(); ++i) {
      if (i > 0) out += " - ";
      out += names[static_cast<std::size_t>(w->walk[i])];
    }
    out += '\n';
  } else {
    out += "certificate: none\n";
  }
  if (r.outcome.quotient.has_value()) {
    const QuotientGraph& q = *r.outcome.quotient;
    out += "fine partition:";
    for (const auto& cls : q.partition.classes) {
      out += ' ';
      append_class_label(out, cls, r.labels);
    }
    out += "\nquotient edges:";
    bool any = false;
    for (int a = 0; a < q.quotient.order(); ++a) {
      // Bits b > a only live in words at or after a's own word.
      std::size_t wbase = static_cast<std::size_t>(a >> 6);
      for_each_bit(q.quotient.row(a).subspan(wbase), [&](int off) {
        int b = static_cast<int>(wbase * 64) + off;
        if (b > a) {
          out += ' ';
          out += names[static_cast<std::size_t>(a)];
          out += "--";
          out += names[static_cast<std::size_t>(b)];
          any = true;
        }
      });
    }
    if (!any) out += " (none)";
    out += '\n';
  }
  if (r.oracle_agreement.has_value()) {
    out += "oracle agreement: ";
    out += verdict(*r.oracle_agreement, color);
    out += '\n';
  }
  return out;
}

std::string census_json(const CensusReport& r) {
  json j;
  j["branch_totals"] = json::object();
  for (const auto& [name, count] : r.branch_totals) {
    j["branch_totals"][name] = count;
  }
  j["graphs_processed"] = r.graphs_processed;
  j["connected_inputs"] = r.connected_inputs;
  j["disconnected_inputs"] = r.disconnected_inputs;
  j["d2_connected"] = r.d2_connected;
  j["d2_disconnected"] = r.d2_disconnected;
  json failures = json::array();
  for (const auto& f : r.failures) {
    json entry;
    entry["graph6"] = f.graph6;
    entry["checks"] = f.checks;
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  return j.dump(2) + "\n";
}

std::string census_text(const CensusReport& r) {
  std::ostringstream out;
  out << "graphs processed: " << r.graphs_processed << "\n";
  out << "connected inputs: " << r.connected_inputs << "\n";
  out << "disconnected inputs: " << r.disconnected_inputs << "\n";
  out << "distance-2 connected: " << r.d2_connected << "\n";
  out << "distance-2 disconnected: " << r.d2_disconnected << "\n";
  out << "branch totals:\n";
  for (const auto& [name, count] : r.branch_totals) {
    out << "  " << name << ": " << count << "\n";
  }
  out << "failures: " << r.failures.size() << "\n";
  for (const auto& f : r.failures) {
    out << "  " << f.graph6 << ":";
    for (const auto& id : f.checks) out << " " << id;
    out << "\n";
  }
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "wall time: " << r.wall_seconds << "s\n";
  return out.str();
}

std::string partition_json(const Partition& p,
                           const std::vector<std::string>& labels) {
  return partition_to_json(p, labels).dump(2) + "\n";
}

std::string class_label(const std::vector<int>& members,
                        const std::vector<std::string>& labels) {
  std::string out;
  append_class_label(out, members, labels);
  return out;
}

}  // namespace d2g
