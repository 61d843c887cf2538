#include "tdim/report.hpp"

#include <cstdio>
#include <sstream>

#include "tdim/graph_io.hpp"

namespace tdim {

namespace {

nlohmann::json set_json(const VertexSet &s) { return s.to_vector(); }

nlohmann::json edges_json(const EdgeSet &e) {
  auto out = nlohmann::json::array();
  for (const auto &x : e)
    out.push_back({x.u, x.v});
  return out;
}

std::string join_ids(const VertexSet &s) {
  std::string out;
  for (VertexId v : s) {
    if (!out.empty())
      out += ',';
    out += std::to_string(v);
  }
  return "{" + out + "}";
}

} // namespace

Report report_from(const Graph &g, const IrreducibilityVerdict &v) {
  Report r{g, v.beta, v.tau_bounds, v.status, v.rule, 0};
  return r;
}

nlohmann::json certificate_json(const Certificate &c) {
  nlohmann::json j{{"kind", std::string(to_string(c.kind))}, {"value", c.value}};
  if (!c.vertices.empty())
    j["vertices"] = c.vertices;
  if (!c.pairs.empty()) {
    auto pairs = nlohmann::json::array();
    for (const auto &p : c.pairs)
      pairs.push_back({{"x", p.x}, {"y", p.y}, {"z1", p.z1}, {"z2", p.z2}});
    j["pairs"] = pairs;
  }
  return j;
}

nlohmann::json to_json(const Report &r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["graph"] = {{"order", r.graph.order()}, {"edge_count", r.graph.edge_count()}, {"hash", content_hash(r.graph)}};
  j["beta"] = r.beta ? nlohmann::json{{"value", r.beta->beta}, {"basis", set_json(r.beta->basis)}} : nlohmann::json();
  if (r.tau) {
    j["tau_lower"] = {{"value", r.tau->lower}, {"certificate", certificate_json(r.tau->lower_certificate)}};
    j["tau_upper"] = {{"value", r.tau->upper},
                      {"source", r.tau->witness.source},
                      {"witness_edges", edges_json(r.tau->witness.edges)},
                      {"witness_basis", set_json(r.tau->witness.landmarks)}};
    j["tau_exact"] = r.tau->exact ? nlohmann::json(*r.tau->exact) : nlohmann::json();
  }
  if (r.verdict) {
    j["verdict"] = std::string(to_string(*r.verdict));
    j["rule"] = r.rule;
  }
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

std::string to_table(const Report &r) {
  std::ostringstream out;
  char line[256];
  auto row = [&](const char *key, const std::string &value) {
    std::snprintf(line, sizeof line, "%-14s %s\n", key, value.c_str());
    out << line;
  };
  row("order", std::to_string(r.graph.order()));
  row("edges", std::to_string(r.graph.edge_count()));
  row("hash", content_hash(r.graph));
  if (r.beta) {
    row("beta", std::to_string(r.beta->beta));
    row("basis", join_ids(r.beta->basis));
  }
  if (r.tau) {
    row("tau_lower", std::to_string(r.tau->lower) + " (" + std::string(to_string(r.tau->lower_certificate.kind)) + ")");
    row("tau_upper", std::to_string(r.tau->upper) + " (" + r.tau->witness.source + ")");
    row("witness_set", join_ids(r.tau->witness.landmarks));
    row("witness_add", std::to_string(r.tau->witness.edges.size()) + " edges");
    row("tau_exact", r.tau->exact ? std::to_string(*r.tau->exact) : "-");
  }
  if (r.verdict) {
    row("verdict", std::string(to_string(*r.verdict)));
    row("rule", r.rule);
  }
  std::snprintf(line, sizeof line, "%.1f", r.wall_time_ms);
  row("wall_time_ms", line);
  return out.str();
}

std::optional<int> recheck_report(const Graph &g, const nlohmann::json &report) {
  if (!report.contains("tau_upper"))
    return std::nullopt;
  const auto &up = report["tau_upper"];
  UpperWitness w;
  for (const auto &e : up["witness_edges"])
    w.edges.insert(Edge(e[0].get<int>(), e[1].get<int>()));
  for (const auto &v : up["witness_basis"])
    w.landmarks.insert(v.get<int>());
  if (!verify_witness(g, w) || w.value() != up["value"].get<int>())
    return std::nullopt;
  return w.value();
}

} // namespace tdim
