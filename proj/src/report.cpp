#include "dit/report.hpp"

#include "dit/codecs.hpp"
#include "dit/error.hpp"

namespace dit {

Json rational_json(const Rat& r) { return r.to_fraction(); }

Rat rational_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("expected a \"p/q\" string, got " + j.dump());
  const auto s = j.get<std::string>();
  if (s.find('/') == std::string::npos) throw InputError("expected a \"p/q\" string, got \"" + s + "\"");
  return Rat::parse(s);
}

namespace {

Json rationals(const std::vector<Rat>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(rational_json(x));
  return out;
}

Json witnesses_json(const std::vector<Witness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back({{"code", w.code.hex()}, {"graph6", encode_graph6(w.graph)}});
  return out;
}

}  // namespace

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  Json out{{"n", g.order()}, {"m", g.size()}, {"edges", std::move(edges)}};
  if (g.order() <= kGraph6MaxOrder) out["graph6"] = encode_graph6(g);
  return out;
}

Json profile_json(const InvariantProfile& p) {
  return {
      {"n", p.n},
      {"m", p.m},
      {"radius", p.radius},
      {"diameter", p.diameter},
      {"avg_ecc", rational_json(p.avg_ecc)},
      {"proximity", rational_json(p.proximity)},
      {"remoteness", rational_json(p.remoteness)},
      {"avg_distance", rational_json(p.avg_distance)},
      {"centers", p.centers},
      {"centroids", p.centroids},
      {"eccentricity", p.ecc_of},
      {"transmission", p.transmission_of},
      {"pi", rationals(p.pi_of)},
  };
}

Json trace_json(const TransformTrace& t) {
  Json locals = Json::object();
  for (const auto& l : t.locals) locals[l.name] = rational_json(l.value);
  Json pre = Json::object();
  for (const auto& v : t.preconditions) pre[v.name] = v.holds;
  Json claims = Json::array();
  for (const auto& c : t.claims)
    claims.push_back({{"name", c.name},
                      {"lhs", rational_json(c.lhs)},
                      {"relation", relation_symbol(c.relation)},
                      {"rhs", rational_json(c.rhs)},
                      {"holds", c.holds()}});
  Json out{
      {"rule", t.rule},
      {"before", {{"graph", graph_json(t.before.graph)}, {"profile", profile_json(t.before.profile)}}},
      {"after", {{"graph", graph_json(t.after.graph)}, {"profile", profile_json(t.after.profile)}}},
  };
  if (t.followup)
    out["followup"] = {{"graph", graph_json(t.followup->graph)}, {"profile", profile_json(t.followup->profile)}};
  out["locals"] = std::move(locals);
  out["preconditions"] = std::move(pre);
  out["claims"] = std::move(claims);
  out["identity"] = t.identity;
  out["checkpoint"] = t.checkpoint;
  out["holds"] = t.holds();
  return out;
}

Json driver_json(const DriverRun& run) {
  Json steps = Json::array();
  for (const auto& s : run.steps) steps.push_back(trace_json(s));
  return {
      {"driver", run.driver},
      {"steps", std::move(steps)},
      {"terminal", graph_json(run.terminal)},
      {"terminal_family", run.terminal_family},
      {"terminal_value", rational_json(run.terminal_value)},
      {"objective_value", rational_json(run.objective_value)},
      {"holds", run.holds()},
  };
}

Json extremal_json(const ExtremalResult& r, std::string_view graph_class, std::string_view objective,
                   Direction direction) {
  return {
      {"class", graph_class},
      {"n", r.n},
      {"objective", objective},
      {"direction", to_string(direction)},
      {"extremal_value", rational_json(r.extremal_value)},
      {"class_size", r.class_size},
      {"tie_count", r.tie_count},
      {"witnesses", witnesses_json(r.witnesses)},
  };
}

Json conjecture_json(const ConjectureReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json j{{"n", row.n}, {"class_size", row.class_size}, {"extremal_value", rational_json(row.extremal_value)}};
    j["bound_value"] = row.bound_value ? rational_json(*row.bound_value) : Json(nullptr);
    j["family"] = row.family;
    j["family_value"] = rational_json(row.family_value);
    j["verdicts"] = {{"family_is_extremal", row.family_is_extremal},
                     {"bound_respected", row.bound_respected},
                     {"bound_tight", row.bound_tight}};
    j["witnesses"] = witnesses_json(row.witnesses);
    rows.push_back(std::move(j));
  }
  return {{"conjecture", report.id}, {"all_hold", report.all_hold()}, {"rows", std::move(rows)}};
}

std::string conjecture_csv(const ConjectureReport& report) {
  std::string out =
      "conjecture,n,class_size,extremal_value,bound_value,family,family_value,family_is_extremal,bound_respected,"
      "bound_tight,tie_count\n";
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  for (const auto& r : report.rows) {
    out += report.id + "," + std::to_string(r.n) + "," + std::to_string(r.class_size) + "," +
           r.extremal_value.to_fraction() + "," + (r.bound_value ? r.bound_value->to_fraction() : "") + "," +
           r.family + "," + r.family_value.to_fraction() + "," + b(r.family_is_extremal) + "," +
           b(r.bound_respected) + "," + b(r.bound_tight) + "," + std::to_string(r.witnesses.size()) + "\n";
  }
  return out;
}

Json report_document(std::vector<std::string> command, std::string_view kind, Json body,
                     std::optional<double> seconds) {
  Json doc{{"tool", "dit"}, {"toolVersion", kToolVersion}, {"command", std::move(command)}};
  if (seconds) doc["timing"] = {{"seconds", *seconds}};
  doc["kind"] = kind;
  doc["result"] = std::move(body);
  return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dit
