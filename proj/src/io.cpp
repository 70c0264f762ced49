#include "d2graph/io.hpp"

#include <array>
#include <string>
#include <unordered_map>

namespace d2g {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kGraph6MaxOrder = 258047;

void check_labels(const Graph& g, const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != g.order()) {
    throw Error(ErrorCode::internal_consistency,
                "label count does not match graph order");
  }
  std::unordered_map<std::string_view, int> seen;
  for (const auto& label : labels) {
    if (!seen.emplace(label, 0).second) {
      throw Error(ErrorCode::internal_consistency,
                  "duplicate vertex label \"" + label + "\"");
    }
  }
}

int decode_byte(char c, std::size_t pos) {
  unsigned char b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126) {
    throw Error(ErrorCode::byte_out_of_range,
                "byte " + std::to_string(static_cast<int>(b)) +
                    " at position " + std::to_string(pos) +
                    " outside graph6 range [63, 126]");
  }
  return b - 63;
}

}  // namespace

LabeledGraph make_labeled(Graph g) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) labels.push_back(std::to_string(v));
  return {std::move(g), std::move(labels)};
}

LabeledGraph make_labeled(Graph g, std::vector<std::string> labels) {
  check_labels(g, labels);
  return {std::move(g), std::move(labels)};
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.substr(0, 2) == ">>") {
    if (line.substr(0, kGraph6Header.size()) != kGraph6Header) {
      throw Error(ErrorCode::bad_header, "malformed graph6 header");
    }
    line.remove_prefix(kGraph6Header.size());
  }
  if (line.empty()) {
    throw Error(ErrorCode::truncated_bitstream, "missing graph6 size field");
  }

  std::size_t pos = 0;
  long n;
  int first = decode_byte(line[pos], pos);
  ++pos;
  if (first < 63) {
    n = first;
  } else {
    if (line.size() < pos + 1) {
      throw Error(ErrorCode::truncated_bitstream, "truncated graph6 size field");
    }
    if (static_cast<unsigned char>(line[pos]) == 126) {
      throw Error(ErrorCode::too_large,
                  "graph6 orders above 258047 are not supported");
    }
    if (line.size() < pos + 3) {
      throw Error(ErrorCode::truncated_bitstream, "truncated graph6 size field");
    }
    n = 0;
    for (int i = 0; i < 3; ++i, ++pos) {
      n = (n << 6) | decode_byte(line[pos], pos);
    }
  }

  long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  std::size_t have = line.size() - pos;
  if (have < need) {
    throw Error(ErrorCode::truncated_bitstream,
                "graph6 bitstream holds " + std::to_string(have) +
                    " bytes, expected " + std::to_string(need));
  }
  if (have > need) {
    throw Error(ErrorCode::trailing_garbage,
                std::to_string(have - need) +
                    " unexpected bytes after graph6 bitstream");
  }

  int order = static_cast<int>(n);
  int words = word_count_for(order);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(order) * words, 0);
  long k = 0;
  int u = 0;
  int v = 1;
  for (std::size_t i = 0; i < need; ++i, ++pos) {
    int value = decode_byte(line[pos], pos);
    for (int b = 5; b >= 0; --b, ++k) {
      int bit = (value >> b) & 1;
      if (k >= bits) {
        if (bit != 0) {
          throw Error(ErrorCode::trailing_garbage,
                      "nonzero padding bits in graph6 bitstream");
        }
        continue;
      }
      if (bit != 0) {
        rows[static_cast<std::size_t>(u) * words + (v >> 6)] |=
            std::uint64_t{1} << (v & 63);
        rows[static_cast<std::size_t>(v) * words + (u >> 6)] |=
            std::uint64_t{1} << (u & 63);
      }
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return Graph::from_rows(order, std::move(rows));
}

std::string write_graph6(const Graph& g) {
  long n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Error(ErrorCode::too_large,
                "graph6 orders above 258047 are not supported");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    acc <<= 6 - filled;
    out.push_back(static_cast<char>(acc + 63));
  }
  return out;
}

LabeledGraph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, int>> edges;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] = index.emplace(token, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::array<std::string_view, 2> tokens;
    std::size_t count = 0;
    bool comment = false;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t tok_start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      std::string_view token = line.substr(tok_start, i - tok_start);
      if (count == 0 && token.front() == '#') {
        comment = true;
        break;
      }
      if (count == 2) {
        throw Error(ErrorCode::too_many_tokens,
                    "line " + std::to_string(line_no) +
                        ": more than two tokens");
      }
      tokens[count++] = token;
    }
    if (comment || count == 0) {
      if (end == text.size()) break;
      continue;
    }
    if (count == 1) {
      intern(std::string(tokens[0]));
    } else {
      if (tokens[0] == tokens[1]) {
        throw Error(ErrorCode::self_loop,
                    "line " + std::to_string(line_no) + ": self-loop at \"" +
                        std::string(tokens[0]) + "\"");
      }
      int u = intern(std::string(tokens[0]));
      int v = intern(std::string(tokens[1]));
      edges.emplace_back(u, v);
    }
    if (end == text.size()) break;
  }

  Graph g = Graph::from_edges(static_cast<int>(labels.size()), edges);
  return {std::move(g), std::move(labels)};
}

std::string write_edge_list(const LabeledGraph& lg) {
  const Graph& g = lg.graph;
  std::string out;
  for (int u = 0; u < g.order(); ++u) {
    for_each_bit(g.row(u), [&](int v) {
      if (v > u) {
        out += lg.labels[static_cast<std::size_t>(u)];
        out.push_back(' ');
        out += lg.labels[static_cast<std::size_t>(v)];
        out.push_back('\n');
      }
    });
  }
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      out += lg.labels[static_cast<std::size_t>(v)];
      out.push_back('\n');
    }
  }
  return out;
}

namespace {

constexpr std::array<const char*, 12> kClusterPalette = {
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928"};

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string write_dot(const LabeledGraph& lg, const Partition* partition) {
  const Graph& g = lg.graph;
  check_labels(g, lg.labels);
  if (partition != nullptr && !partition->is_partition_of(g.order())) {
    throw Error(ErrorCode::partition_mismatch,
                "partition does not cover the vertex set");
  }
  std::string out = "graph G {\n";
  if (partition == nullptr) {
    out += "  node [shape=circle, style=filled, fillcolor=\"#eeeeee\"];\n";
    for (int v = 0; v < g.order(); ++v) {
      out += "  " + dot_quote(lg.labels[static_cast<std::size_t>(v)]) + ";\n";
    }
  } else {
    out += "  node [shape=circle, style=filled];\n";
    for (int c = 0; c < partition->class_count(); ++c) {
      const auto& cls = partition->classes[static_cast<std::size_t>(c)];
      std::string cls_label;
      for (int v : cls) {
        if (!cls_label.empty()) cls_label.push_back(',');
        cls_label += lg.labels[static_cast<std::size_t>(v)];
      }
      out += "  subgraph cluster_" + std::to_string(c) + " {\n";
      out += "    label=" + dot_quote("{" + cls_label + "}") + ";\n";
      out += std::string("    node [fillcolor=\"") +
             kClusterPalette[static_cast<std::size_t>(c) %
                             kClusterPalette.size()] +
             "\"];\n";
      for (int v : cls) {
        out +=
            "    " + dot_quote(lg.labels[static_cast<std::size_t>(v)]) + ";\n";
      }
      out += "  }\n";
    }
  }
  for (int u = 0; u < g.order(); ++u) {
    for_each_bit(g.row(u), [&](int v) {
      if (v > u) {
        out += "  " + dot_quote(lg.labels[static_cast<std::size_t>(u)]) +
               " -- " + dot_quote(lg.labels[static_cast<std::size_t>(v)]) +
               ";\n";
      }
    });
  }
  out += "}\n";
  return out;
}

}  // namespace d2g
