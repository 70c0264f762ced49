#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "d2graph.h"

namespace {

struct GraphHandle {
  d2g_graph* ptr = nullptr;
  ~GraphHandle() { d2g_graph_free(ptr); }
};

struct AnalysisHandle {
  d2g_analysis* ptr = nullptr;
  ~AnalysisHandle() { d2g_analysis_free(ptr); }
};

struct CensusHandle {
  d2g_census* ptr = nullptr;
  ~CensusHandle() { d2g_census_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { d2g_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? std::string() : ptr; }
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void expect_ok(d2g_status status) {
  if (status != D2G_OK) throw CliError(d2g_last_error());
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw CliError("failed writing " + path);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string detect_format(const std::string& path,
                          const std::string& requested) {
  if (!requested.empty()) return requested;
  return ends_with(path, ".g6") ? "graph6" : "edges";
}

/// A graph6 input file must hold exactly one graph.
std::string single_graph6_line(const std::string& text) {
  std::string found;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    bool last = end == std::string::npos;
    if (last) end = text.size();
    std::string line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) {
      if (!found.empty()) {
        throw CliError("input holds more than one graph6 line");
      }
      found = line;
    }
    if (last) break;
    start = end + 1;
  }
  if (found.empty()) throw CliError("no graph6 line in input");
  return found;
}

GraphHandle load_graph(const std::string& path, const std::string& format) {
  std::string text = read_input(path);
  GraphHandle g;
  if (format == "graph6") {
    expect_ok(d2g_parse_graph6(single_graph6_line(text).c_str(), &g.ptr));
  } else {
    expect_ok(d2g_parse_edge_list(text.c_str(), &g.ptr));
  }
  return g;
}

bool color_enabled() {
  const char* setting = std::getenv("D2_COLOR");
  if (setting != nullptr && std::string(setting) == "never") return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string render_graph(const d2g_graph* g, const std::string& format) {
  OwnedString text;
  if (format == "graph6") {
    expect_ok(d2g_write_graph6(g, &text.ptr));
    return text.str() + "\n";
  }
  if (format == "edges") {
    expect_ok(d2g_write_edge_list(g, &text.ptr));
    return text.str();
  }
  expect_ok(d2g_write_dot(g, 0, &text.ptr));
  return text.str();
}

int run_analyze(const std::string& file, const std::string& format,
                bool as_json, bool with_oracle) {
  GraphHandle g = load_graph(file, detect_format(file, format));
  AnalysisHandle analysis;
  expect_ok(d2g_analyze(g.ptr, with_oracle ? 1 : 0, &analysis.ptr));
  OwnedString text;
  if (as_json) {
    expect_ok(d2g_analysis_json(analysis.ptr, &text.ptr));
  } else {
    expect_ok(
        d2g_analysis_text(analysis.ptr, color_enabled() ? 1 : 0, &text.ptr));
  }
  std::cout << text.str();
  if (with_oracle && d2g_analysis_oracle_agreement(analysis.ptr) == 0) {
    std::cerr << "error: structural verdict disagrees with the oracle\n";
    return 2;
  }
  return 0;
}

int run_d2(const std::string& file, const std::string& out_path,
           const std::string& format) {
  GraphHandle g = load_graph(file, detect_format(file, ""));
  GraphHandle d2;
  expect_ok(d2g_distance2(g.ptr, &d2.ptr));
  write_output(out_path, render_graph(d2.ptr, format));
  return 0;
}

int run_contract(const std::string& file, const std::string& out_path,
                 const std::string& format) {
  GraphHandle g = load_graph(file, detect_format(file, ""));
  if (format == "dot") {
    // DOT keeps the base graph and draws the fine classes as clusters.
    OwnedString text;
    expect_ok(d2g_write_dot(g.ptr, 1, &text.ptr));
    write_output(out_path, text.str());
    return 0;
  }
  GraphHandle quotient;
  expect_ok(d2g_contract_fine(g.ptr, &quotient.ptr));
  write_output(out_path, render_graph(quotient.ptr, format));
  if (!out_path.empty() && out_path != "-") {
    OwnedString partition;
    expect_ok(d2g_fine_partition_json(g.ptr, &partition.ptr));
    write_output(out_path + ".partition.json", partition.str());
  }
  return 0;
}

int run_convert(const std::string& from, const std::string& to,
                const std::string& in_path, const std::string& out_path) {
  GraphHandle g = load_graph(in_path, from);
  write_output(out_path, render_graph(g.ptr, to));
  return 0;
}

int run_verify(int max_n, const std::string& graph6_path, int jobs,
               bool as_json) {
  CensusHandle census;
  if (!graph6_path.empty()) {
    std::string text = read_input(graph6_path);
    expect_ok(d2g_verify_graph6_text(text.c_str(), jobs, &census.ptr));
  } else {
    expect_ok(d2g_verify_range(1, max_n, jobs, &census.ptr));
  }
  OwnedString text;
  if (as_json) {
    expect_ok(d2g_census_json(census.ptr, &text.ptr));
  } else {
    expect_ok(d2g_census_text(census.ptr, &text.ptr));
  }
  std::cout << text.str();
  return d2g_census_failures(census.ptr) > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-2 connectivity analyzer"};
  app.require_subcommand(1);

  std::string file;
  std::string format;
  std::string out_path;
  std::string from;
  std::string to;
  std::string in_path;
  std::string graph6_path;
  bool as_json = false;
  bool with_oracle = false;
  int max_n = 5;
  int jobs = 0;

  auto* analyze = app.add_subcommand(
      "analyze", "Decide distance-2 connectivity and print a report");
  analyze->add_option("file", file, "input graph (\"-\" for stdin)")
      ->required();
  analyze->add_option("--format", format, "input format")
      ->check(CLI::IsMember({"graph6", "edges"}));
  analyze->add_flag("--json", as_json, "machine-readable output");
  analyze->add_flag("--oracle", with_oracle,
                    "cross-check against the distance-2 components");

  auto* d2 = app.add_subcommand("d2", "Write the distance-2 graph");
  d2->add_option("file", file, "input graph (\"-\" for stdin)")->required();
  d2->add_option("-o,--output", out_path, "output path (default stdout)");
  d2->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"graph6", "edges", "dot"}));

  auto* contract = app.add_subcommand(
      "contract", "Collapse the maximal fine partition");
  contract->add_option("file", file, "input graph (\"-\" for stdin)")
      ->required();
  contract->add_option("-o,--output", out_path, "output path (default stdout)");
  contract->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"graph6", "edges", "dot"}));

  auto* convert = app.add_subcommand("convert", "Re-encode a graph");
  convert->add_option("--from", from, "input format")
      ->required()
      ->check(CLI::IsMember({"graph6", "edges"}));
  convert->add_option("--to", to, "output format")
      ->required()
      ->check(CLI::IsMember({"graph6", "edges", "dot"}));
  convert->add_option("input", in_path, "input path (\"-\" for stdin)")
      ->required();
  convert->add_option("output", out_path, "output path (\"-\" for stdout)")
      ->required();

  auto* verify = app.add_subcommand(
      "verify", "Run the theorem suite over small graphs");
  verify->add_option("--max-n", max_n, "largest order to enumerate")
      ->capture_default_str();
  verify->add_option("--graph6", graph6_path,
                     "check the graphs in this graph6 file instead");
  verify->add_option("--jobs", jobs, "worker threads (0 = auto)")
      ->capture_default_str();
  verify->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(analyze)) {
      return run_analyze(file, format, as_json, with_oracle);
    }
    if (app.got_subcommand(d2)) {
      return run_d2(file, out_path, format.empty() ? "graph6" : format);
    }
    if (app.got_subcommand(contract)) {
      return run_contract(file, out_path, format.empty() ? "graph6" : format);
    }
    if (app.got_subcommand(convert)) {
      return run_convert(from, to, in_path, out_path);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(max_n, graph6_path, jobs, as_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
