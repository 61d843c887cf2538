#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "tdim/atlas.hpp"
#include "tdim/errors.hpp"
#include "tdim/graph_io.hpp"
#include "tdim/irreducible.hpp"
#include "tdim/report.hpp"
#include "tdim/shortlex.hpp"

using namespace tdim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kForcedComplementEdges = 26;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool force = false;
  int max_order = Limits{}.max_order;
  int max_complement_edges = Limits{}.max_complement_edges;
  int workers = 0;
  unsigned seed = 20240917;

  Limits limits() const {
    Limits l;
    l.max_order = force ? kMaxOrder : max_order;
    l.max_complement_edges = force ? kForcedComplementEdges : max_complement_edges;
    l.workers = workers;
    return l;
  }
};

class Stopwatch {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<int> parse_ints(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception &) {
      throw UsageError("not an integer: '" + item + "'");
    }
    if (used != item.size())
      throw UsageError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int param(const std::vector<std::string> &params, std::size_t i, const std::string &family) {
  if (i >= params.size())
    throw UsageError("construct " + family + ": missing parameter " + std::to_string(i + 1));
  const auto v = parse_ints(params[i]);
  if (v.size() != 1)
    throw UsageError("construct " + family + ": parameter " + std::to_string(i + 1) + " must be one integer");
  return v[0];
}

void emit(const Options &opt, const Report &r) {
  if (opt.json) {
    auto j = to_json(r);
    j["seed"] = opt.seed;
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("# tdim seed=%u\n", opt.seed);
    std::cout << to_table(r);
  }
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_mdim(const Options &opt, const std::string &path) {
  Stopwatch sw;
  const Graph g = read_edge_list(path);
  Report r{g, metric_dimension(g, opt.limits().max_order), std::nullopt, std::nullopt, "", 0};
  r.wall_time_ms = sw.ms();
  emit(opt, r);
  return kExitOk;
}

int cmd_tau(const Options &opt, const std::string &path, bool exact) {
  Stopwatch sw;
  const Graph g = read_edge_list(path);
  const Limits limits = opt.limits();
  Report r{g, std::nullopt, std::nullopt, std::nullopt, "", 0};
  if (g.order() <= limits.max_order)
    r.beta = metric_dimension(g, limits.max_order);
  else if (exact)
    throw CapExceeded("order " + std::to_string(g.order()) + " exceeds --max-order " + std::to_string(limits.max_order));
  r.tau = exact ? tau_exact(g, limits) : tau_bounds(g, limits);
  r.wall_time_ms = sw.ms();
  emit(opt, r);
  return kExitOk;
}

int cmd_check(const Options &opt, const std::string &path) {
  Stopwatch sw;
  const Graph g = read_edge_list(path);
  Report r = report_from(g, is_irreducible(g, opt.limits()));
  r.wall_time_ms = sw.ms();
  emit(opt, r);
  return kExitOk;
}

struct Constructed {
  Graph graph;
  VertexSet landmarks;
  bool has_landmarks = false;
};

Constructed construct(const Options &opt, const std::string &family, const std::vector<std::string> &params) {
  auto with = [](Graph g, VertexSet w) { return Constructed{std::move(g), w, true}; };
  if (family == "petersen")
    return {generalized_petersen(param(params, 0, family), param(params, 1, family)), {}, false};
  if (family == "multipartite") {
    const auto sizes = parse_ints(params.empty() ? "" : params[0]);
    return {complete_multipartite(sizes), {}, false};
  }
  if (family == "cyclesq")
    return {cycle_square(param(params, 0, family)), {}, false};
  if (family == "sgraph") {
    const int n = param(params, 0, family);
    return with(s_graph(n), VertexSet::range(g_of(std::max(n, 2))));
  }
  if (family == "sgraphbs") {
    const int b = param(params, 0, family);
    return with(s_graph_bs(b, param(params, 1, family)), VertexSet::range(b));
  }
  if (family == "irreducible")
    return {irreducible_of(param(params, 0, family), param(params, 1, family)), {}, false};
  if (family == "embed") {
    if (params.empty())
      throw UsageError("construct embed: missing edge-list path");
    auto e = embed_in_irreducible(read_edge_list(params[0]));
    return with(std::move(e.graph), e.landmarks);
  }
  if (family == "sharpness") {
    const auto sizes = sharpness_family(param(params, 0, family), param(params, 1, family));
    return {complete_multipartite(sizes), {}, false};
  }
  if (family == "mpthreshold") {
    const auto sizes = parse_ints(params.empty() ? "" : params[0]);
    auto t = multipartite_threshold_graph(sizes);
    return with(std::move(t.graph), t.landmarks);
  }
  (void)opt;
  throw UsageError("unknown family '" + family + "'");
}

int cmd_construct(const Options &opt, const std::string &family, const std::vector<std::string> &params,
                  const std::string &out, const std::string &dot, bool highlight) {
  auto c = construct(opt, family, params);
  const auto text = format_edge_list(c.graph);
  if (out.empty())
    std::cout << text;
  else
    write_text(out, text);
  if (!dot.empty()) {
    VertexSet marked;
    if (highlight) {
      if (c.has_landmarks)
        marked = c.landmarks;
      else
        marked = metric_dimension(c.graph, opt.limits().max_order).basis;
    }
    write_text(dot, format_dot(c.graph, marked));
  }
  return kExitOk;
}

int cmd_verify(const Options &opt, const std::string &path, const std::string &set) {
  const Graph g = read_edge_list(path);
  VertexSet w;
  for (int v : parse_ints(set)) {
    if (v < 0 || v >= g.order())
      throw UsageError("vertex " + std::to_string(v) + " out of range");
    w.insert(v);
  }
  const auto d = distances(g);
  const auto bad = first_unresolved_pair(d, w);
  if (opt.json) {
    nlohmann::json j{{"schema", kReportSchema}, {"resolving", !bad}};
    if (bad)
      j["pair"] = {bad->first, bad->second};
    std::cout << j.dump(2) << '\n';
  } else if (!bad) {
    std::cout << "ok\n";
  } else {
    std::cout << "fail: vertices " << bad->first << " and " << bad->second << " have equal distances to the set\n";
  }
  return bad ? kExitFail : kExitOk;
}

int cmd_shortlex(const Options &opt, const std::string &path, const std::string &landmarks,
                 const std::string &targets, bool reverse, const std::string &out) {
  const Graph g = read_edge_list(path);
  AssignmentProblem prob{&g, parse_ints(landmarks), parse_ints(targets)};
  const EdgeSet added = reverse ? reverse_shortlex_assign(prob) : shortlex_assign(prob);
  const Graph h = add_edges(g, added);
  if (opt.json) {
    auto edges = nlohmann::json::array();
    for (const auto &e : added)
      edges.push_back({e.u, e.v});
    std::cout << nlohmann::json{{"schema", kReportSchema}, {"added_edges", edges}}.dump(2) << '\n';
  }
  const auto text = format_edge_list(h);
  if (!out.empty())
    write_text(out, text);
  else if (!opt.json)
    std::cout << text;
  return kExitOk;
}

struct AtlasRow {
  CanonicalGraph graph;
  Report report;
};

int cmd_atlas(const Options &opt, int max_order, const std::string &out_dir) {
  if (max_order < 1 || max_order > kMaxAtlasOrder)
    throw UsageError("--max-order must be in [1, " + std::to_string(kMaxAtlasOrder) + "] for atlas");
  const auto graphs = connected_atlas(max_order);
  std::vector<AtlasRow> rows(graphs.size());
  Limits limits = opt.limits();
  limits.workers = 1;
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::string error;
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        Stopwatch sw;
        const Graph &g = graphs[i].graph;
        auto v = is_irreducible(g, limits);
        if (!v.tau_bounds.exact)
          v.tau_bounds = tau_exact(g, limits);
        rows[i] = {graphs[i], report_from(g, v)};
        rows[i].report.wall_time_ms = sw.ms();
      } catch (const std::exception &e) {
        std::lock_guard lock(err_mu);
        error = e.what();
      }
    }
  };
  {
    const int workers = opt.workers > 0 ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (int i = 1; i < workers; ++i)
      pool.emplace_back(work);
    work();
  }
  if (!error.empty())
    throw std::runtime_error(error);

  // (n, beta, tau, irreducible) -> count
  std::map<std::tuple<int, int, int, bool>, int> summary;
  for (const auto &row : rows) {
    const auto &r = row.report;
    ++summary[{r.graph.order(), r.beta->beta, *r.tau->exact, *r.tau->exact == r.beta->beta}];
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto &row : rows) {
      char name[64];
      std::snprintf(name, sizeof name, "n%d_%016llx.json", row.graph.graph.order(),
                    static_cast<unsigned long long>(row.graph.code));
      auto j = to_json(row.report);
      j["seed"] = opt.seed;
      write_text((std::filesystem::path(out_dir) / name).string(), j.dump(2) + "\n");
      write_text((std::filesystem::path(out_dir) / name).replace_extension(".el").string(),
                 format_edge_list(row.graph.graph));
    }
  }
  if (opt.json) {
    auto j = nlohmann::json::array();
    for (const auto &[key, count] : summary) {
      const auto &[n, beta, tau, irr] = key;
      j.push_back({{"order", n}, {"beta", beta}, {"tau", tau}, {"irreducible", irr}, {"count", count}});
    }
    std::cout << nlohmann::json{{"schema", kReportSchema}, {"seed", opt.seed}, {"graphs", rows.size()}, {"summary", j}}
                     .dump(2)
              << '\n';
  } else {
    std::printf("# tdim seed=%u\n", opt.seed);
    std::printf("%3s %5s %4s %12s %6s\n", "n", "beta", "tau", "irreducible", "count");
    for (const auto &[key, count] : summary) {
      const auto &[n, beta, tau, irr] = key;
      std::printf("%3d %5d %4d %12s %6d\n", n, beta, tau, irr ? "yes" : "no", count);
    }
    std::printf("total %zu connected graphs\n", rows.size());
  }
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Metric and threshold dimension toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON instead of a table");
  app.add_option("--max-order", opt.max_order, "Largest order for exact metric dimension");
  app.add_option("--max-complement-edges", opt.max_complement_edges, "Largest complement size for exhaustive tau");
  app.add_flag("--force", opt.force, "Lift the search caps");
  app.add_option("--seed", opt.seed, "Seed recorded in every report");
  app.add_option("--workers", opt.workers, "Worker threads (0 = all cores)");

  std::string path, set, landmarks, targets, out, dot, family;
  std::vector<std::string> params;
  bool exact = false, reverse = false, highlight = false;
  int atlas_order = 0;

  auto *mdim = app.add_subcommand("mdim", "Metric dimension and a lexicographically first basis");
  mdim->add_option("graph", path, "Edge-list file")->required();
  auto *tdim_cmd = app.add_subcommand("tdim", "Threshold dimension bounds, or exact with --exact");
  tdim_cmd->add_option("graph", path, "Edge-list file")->required();
  tdim_cmd->add_flag("--exact", exact, "Enumerate all spanning supergraphs");
  auto *bounds = app.add_subcommand("bounds", "Certified lower and constructive upper bounds on tau");
  bounds->add_option("graph", path, "Edge-list file")->required();
  auto *check = app.add_subcommand("check-irreducible", "Decide whether tau equals beta");
  check->add_option("graph", path, "Edge-list file")->required();
  auto *cons = app.add_subcommand("construct", "Build a named graph family");
  cons->add_option("family", family, "petersen|multipartite|cyclesq|sgraph|sgraphbs|irreducible|embed|sharpness|mpthreshold")
      ->required();
  cons->add_option("params", params, "Family parameters");
  cons->add_option("--out", out, "Edge-list output file (default stdout)");
  cons->add_option("--dot", dot, "DOT output file");
  cons->add_flag("--basis-highlight", highlight, "Colour the landmark set or a basis in the DOT output");
  auto *verify = app.add_subcommand("verify-resolving", "Check whether a vertex set resolves a graph");
  verify->add_option("graph", path, "Edge-list file")->required();
  verify->add_option("--set", set, "Comma-separated vertex ids")->required();
  auto *slex = app.add_subcommand("shortlex-assign", "Apply the shortlex assignment to a graph");
  slex->add_option("graph", path, "Edge-list file")->required();
  slex->add_option("--landmarks", landmarks, "Comma-separated landmark ids")->required();
  slex->add_option("--targets", targets, "Comma-separated target ids in assignment order")->required();
  slex->add_flag("--reverse", reverse, "Use reverse shortlex order");
  slex->add_option("--out", out, "Edge-list output file");
  auto *atlas = app.add_subcommand("atlas", "Reports for every connected graph up to a given order");
  atlas->add_option("--max-order", atlas_order, "Largest order (at most 7)")->required();
  atlas->add_option("--out", out, "Directory for per-graph reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*mdim)
      return cmd_mdim(opt, path);
    if (*tdim_cmd)
      return cmd_tau(opt, path, exact);
    if (*bounds)
      return cmd_tau(opt, path, false);
    if (*check)
      return cmd_check(opt, path);
    if (*cons)
      return cmd_construct(opt, family, params, out, dot, highlight);
    if (*verify)
      return cmd_verify(opt, path, set);
    if (*slex)
      return cmd_shortlex(opt, path, landmarks, targets, reverse, out);
    if (*atlas)
      return cmd_atlas(opt, atlas_order, out);
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapExceeded &e) {
    std::cerr << "cap exceeded: " << e.what() << " (use --force to lift)\n";
    return kExitCap;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitFail;
}
