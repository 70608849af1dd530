#include "dit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "dit/codecs.hpp"
#include "dit/enumerate.hpp"
#include "dit/error.hpp"
#include "dit/expr.hpp"
#include "dit/families.hpp"
#include "dit/report.hpp"
#include "dit/search.hpp"
#include "dit/transforms.hpp"

namespace dit {
namespace {

struct Options {
  // shared
  std::string format;
  bool json = false;
  bool csv = false;
  int jobs = 1;
  std::uint64_t seed = 1;
  bool timing = false;
  bool assert_ = false;
  bool allow_large = false;
  // graph source
  std::string input;
  std::string graph6;
  std::string family;
  int n = 0;
  // enumerate / search / verify
  std::string graph_class;
  bool count_only = false;
  std::string expr;
  bool maximize = false;
  bool minimize = false;
  std::string conjecture;
  int min_n = 0;
  int max_n = 0;
  // transform
  std::string rule;
  std::string driver;
};

constexpr std::string_view kRandomTree = "random_tree";

std::string read_all(std::istream& s) { return {std::istreambuf_iterator<char>(s), {}}; }

Graph family_graph(const Options& o) {
  if (o.n < 1) throw InputError("--family needs --n");
  if (o.family == kRandomTree) return make_random_tree(o.n, o.seed);
  return make_family(o.family, o.n);
}

Graph load_graph(const Options& o, std::istream& in) {
  const int sources = !o.input.empty() + !o.graph6.empty() + !o.family.empty();
  if (sources != 1) throw InputError("give exactly one of --input, --graph6, --family");
  if (!o.graph6.empty()) return decode_graph6(o.graph6);
  if (!o.family.empty()) return family_graph(o);
  std::string text;
  if (o.input == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(o.input);
    if (!f) throw InputError("cannot read " + o.input);
    text = read_all(f);
  }
  if (o.format == "graph6") {
    auto gs = decode_graph6_lines(text);
    if (gs.empty()) throw InputError(o.input + ": no graph");
    return gs.front();
  }
  try {
    return read_edgelist(text);
  } catch (const InputError& e) {
    throw InputError(o.input + ": " + e.what());
  }
}

EnumerationOptions enum_options(const Options& o) { return {o.jobs, o.allow_large}; }

void write_graph(std::ostream& out, const Graph& g, std::string_view format) {
  if (format == "graph6") out << encode_graph6(g) << "\n";
  else out << write_edgelist(g);
}

std::string list(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

void print_profile(std::ostream& out, const InvariantProfile& p) {
  out << "n " << p.n << "\n"
      << "m " << p.m << "\n"
      << "radius " << p.radius << "\n"
      << "diameter " << p.diameter << "\n"
      << "avg_ecc " << p.avg_ecc.to_fraction() << "\n"
      << "proximity " << p.proximity.to_fraction() << "\n"
      << "remoteness " << p.remoteness.to_fraction() << "\n"
      << "avg_distance " << p.avg_distance.to_fraction() << "\n"
      << "centers " << list(p.centers) << "\n"
      << "centroids " << list(p.centroids) << "\n";
}

void print_trace(std::ostream& out, const TransformTrace& t) {
  out << t.rule << ": " << encode_graph6(t.before.graph) << " -> " << encode_graph6(t.after.graph);
  if (t.followup) out << " -> " << encode_graph6(t.followup->graph);
  if (t.identity) out << " (identity)";
  if (t.checkpoint) out << " [checkpoint]";
  out << "\n";
  for (const auto& l : t.locals) out << "  " << l.name << " = " << l.value.to_fraction() << "\n";
  for (const auto& c : t.claims)
    out << "  " << (c.holds() ? "ok   " : "FAIL ") << c.name << ": " << c.lhs.to_fraction() << " "
        << relation_symbol(c.relation) << " " << c.rhs.to_fraction() << "\n";
}

void print_witnesses(std::ostream& out, const std::vector<Witness>& ws) {
  for (const auto& w : ws) out << "  " << encode_graph6(w.graph) << "  " << w.code.hex() << "\n";
}

/// Argument echo with --jobs removed, so reports do not depend on the worker count.
std::vector<std::string> command_echo(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--jobs" || args[i] == "-j") {
      ++i;
      continue;
    }
    if (args[i].rfind("--jobs=", 0) == 0) continue;
    out.push_back(args[i]);
  }
  return out;
}

class Runner {
 public:
  Runner(const Options& o, const std::vector<std::string>& args, std::istream& in, std::ostream& out)
      : o_(o), echo_(command_echo(args)), in_(in), out_(out), started_(std::chrono::steady_clock::now()) {}

  int invariants() {
    const Graph g = load_graph(o_, in_);
    const auto p = invariant_profile(g);
    if (o_.json) return emit("invariants", {{"graph", graph_json(g)}, {"profile", profile_json(p)}});
    print_profile(out_, p);
    return 0;
  }

  int family() {
    if (o_.family.empty()) throw InputError("family needs --family");
    const Graph g = family_graph(o_);
    if (o_.json) return emit("family", {{"family", o_.family}, {"graph", graph_json(g)}});
    write_graph(out_, g, o_.format.empty() ? "edgelist" : o_.format);
    return 0;
  }

  int enumerate() {
    const auto cls = parse_graph_class(o_.graph_class);
    const int cap = class_cap(cls, o_.allow_large);
    if (o_.n < 1 || o_.n > cap)
      throw InputError("--n must lie in 1.." + std::to_string(cap) + " for class " + std::string(to_string(cls)));
    const auto graphs = enumerate_class(cls, o_.n, enum_options(o_));
    if (o_.json) {
      Json j{{"class", to_string(cls)}, {"n", o_.n}, {"count", graphs.size()}};
      if (!o_.count_only) {
        Json g6 = Json::array();
        for (const auto& g : graphs) g6.push_back(encode_graph6(g));
        j["graph6"] = std::move(g6);
      }
      return emit("enumerate", std::move(j));
    }
    if (o_.count_only) {
      out_ << graphs.size() << "\n";
      return 0;
    }
    const std::string format = o_.format.empty() ? "graph6" : o_.format;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (format == "edgelist" && i > 0) out_ << "\n";
      write_graph(out_, graphs[i], format);
    }
    return 0;
  }

  int search() {
    if (o_.maximize == o_.minimize) throw InputError("search needs exactly one of --maximize, --minimize");
    const auto cls = parse_graph_class(o_.graph_class);
    const auto objective = parse_expr(o_.expr);
    const auto dir = o_.maximize ? Direction::Maximize : Direction::Minimize;
    const auto r = search_extremal(cls, o_.n, objective, dir, enum_options(o_));
    if (o_.json) return emit("search", extremal_json(r, to_string(cls), print_expr(objective), dir));
    out_ << "class " << to_string(cls) << "\n"
         << "n " << r.n << "\n"
         << "objective " << print_expr(objective) << "\n"
         << "direction " << to_string(dir) << "\n"
         << "extremal_value " << r.extremal_value.to_fraction() << "\n"
         << "class_size " << r.class_size << "\n"
         << "witnesses " << r.tie_count << "\n";
    print_witnesses(out_, r.witnesses);
    return 0;
  }

  int verify() {
    if (o_.json && o_.csv) throw InputError("--json and --csv are exclusive");
    std::vector<const ConjectureSpec*> specs;
    if (o_.conjecture == "all") {
      for (const auto& c : conjecture_catalog()) specs.push_back(&c);
    } else {
      specs.push_back(&find_conjecture(o_.conjecture));
    }
    std::vector<ConjectureReport> reports;
    for (const auto* spec : specs) {
      const int lo = o_.min_n > 0 ? o_.min_n : spec->min_n;
      const int hi = o_.max_n > 0 ? o_.max_n : class_cap(spec->graph_class, o_.allow_large);
      reports.push_back(verify_conjecture(*spec, lo, hi, enum_options(o_)));
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_hold(); });
    if (o_.json) {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(conjecture_json(r));
      emit("verify", reports.size() == 1 ? all.front() : Json{{"reports", all}});
    } else if (o_.csv) {
      for (std::size_t i = 0; i < reports.size(); ++i) {
        auto csv = conjecture_csv(reports[i]);
        if (i > 0) csv.erase(0, csv.find('\n') + 1);
        out_ << csv;
      }
    } else {
      for (const auto& r : reports) {
        out_ << r.id << "\n";
        out_ << "  n  extremal  bound  family  family_value  family_is_extremal  bound_respected  bound_tight\n";
        for (const auto& row : r.rows)
          out_ << "  " << row.n << "  " << row.extremal_value.to_fraction() << "  "
               << (row.bound_value ? row.bound_value->to_fraction() : "-") << "  " << row.family << "  "
               << row.family_value.to_fraction() << "  " << (row.family_is_extremal ? "yes" : "no") << "  "
               << (row.bound_respected ? "yes" : "no") << "  " << (row.bound_tight ? "yes" : "no") << "\n";
        out_ << "  " << (r.all_hold() ? "holds" : "does not hold") << "\n";
      }
    }
    return o_.assert_ && !ok ? 1 : 0;
  }

  int transform() {
    if (o_.rule.empty() == o_.driver.empty()) throw InputError("transform needs exactly one of --rule, --driver");
    const Graph g = load_graph(o_, in_);
    bool ok = true;
    if (!o_.rule.empty()) {
      const auto t = apply_rule(o_.rule, g);
      ok = t.holds();
      if (o_.json) emit("transform", {{"traces", Json::array({trace_json(t)})}});
      else print_trace(out_, t);
    } else {
      const auto run = run_driver(o_.driver, g);
      ok = run.holds();
      if (o_.json) {
        emit("driver", driver_json(run));
      } else {
        for (const auto& s : run.steps) print_trace(out_, s);
        out_ << "terminal " << encode_graph6(run.terminal) << " (" << run.terminal_family << ")\n"
             << "terminal_value " << run.terminal_value.to_fraction() << "\n"
             << "objective_value " << run.objective_value.to_fraction() << "\n";
      }
    }
    return o_.assert_ && !ok ? 1 : 0;
  }

 private:
  int emit(std::string_view kind, Json body) {
    std::optional<double> seconds;
    if (o_.timing)
      seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
    out_ << dump(report_document(echo_, kind, std::move(body), seconds));
    return 0;
  }

  const Options& o_;
  std::vector<std::string> echo_;
  std::istream& in_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point started_;
};

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "graph text format")->check(CLI::IsMember({"edgelist", "graph6"}));
  sub->add_flag("--json", o.json, "emit a JSON report");
  sub->add_flag("--timing", o.timing, "include wall-clock timing in the report");
}

void add_graph_source(CLI::App* sub, Options& o) {
  sub->add_option("--input,--graph", o.input, "graph file ('-' for stdin), read per --format");
  sub->add_option("--graph6", o.graph6, "graph given inline as graph6");
  sub->add_option("--family", o.family, "family id (path, cycle, spider3, spider4, broom, crossed_cycle, random_tree)");
  sub->add_option("--n", o.n, "order of the family instance");
  sub->add_option("--seed", o.seed, "seed for random_tree");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact distance invariants, extremal search and proof transformations for small graphs", "dit"};
  app.require_subcommand(1);
  app.add_option("--jobs,-j", o.jobs, "worker threads for enumerate/search/verify")
      ->envname("DIT_JOBS")
      ->check(CLI::PositiveNumber);

  auto* inv = app.add_subcommand("invariants", "distance profile of one graph");
  add_graph_source(inv, o);
  add_output_flags(inv, o);

  auto* fam = app.add_subcommand("family", "emit a family instance");
  fam->add_option("--family", o.family, "family id")->required();
  fam->add_option("--n", o.n, "order")->required();
  fam->add_option("--seed", o.seed, "seed for random_tree");
  add_output_flags(fam, o);

  auto* en = app.add_subcommand("enumerate", "all non-isomorphic graphs of a class");
  en->add_option("--class", o.graph_class, "tree, caterpillar or connected")->required();
  en->add_option("--n", o.n, "order")->required();
  en->add_flag("--count-only", o.count_only, "print only the number of graphs");
  en->add_flag("--allow-large", o.allow_large, "lift the connected cap to n = 8");
  add_output_flags(en, o);

  auto* se = app.add_subcommand("search", "exhaustive extremum of an invariant expression");
  se->add_option("--class", o.graph_class, "tree, caterpillar or connected")->required();
  se->add_option("--n", o.n, "order")->required();
  se->add_option("--expr", o.expr, "objective, e.g. \"avg_distance - proximity\"")->required();
  auto* mx = se->add_flag("--maximize", o.maximize);
  auto* mn = se->add_flag("--minimize", o.minimize);
  mx->excludes(mn);
  se->add_flag("--allow-large", o.allow_large, "lift the connected cap to n = 8");
  add_output_flags(se, o);

  auto* ve = app.add_subcommand("verify", "check a built-in conjecture over a range of n");
  ve->add_option("--conjecture", o.conjecture, "catalog id or 'all'")->required();
  ve->add_option("--min-n", o.min_n, "first n (default: the entry's minimum)");
  ve->add_option("--max-n", o.max_n, "last n (default: the class cap)");
  ve->add_flag("--assert", o.assert_, "exit 1 unless every row holds");
  ve->add_flag("--csv", o.csv, "emit the per-n table as CSV");
  ve->add_flag("--allow-large", o.allow_large, "lift the connected cap to n = 8");
  add_output_flags(ve, o);

  auto* tr = app.add_subcommand("transform", "apply a rule or a driver and print the trace");
  tr->add_option("--rule", o.rule, "T1..T10");
  tr->add_option("--driver", o.driver,
                 "max_avgdist_minus_proximity, max_ecc_minus_remoteness or min_remoteness_minus_radius");
  tr->add_flag("--assert", o.assert_, "exit 1 if any recorded claim fails");
  add_graph_source(tr, o);
  add_output_flags(tr, o);

  for (auto* sub : {inv, fam, en, se, ve, tr}) sub->fallthrough();

  const auto usage_error = [&](std::string_view what) {
    err << "dit: " << what << "\n\n" << app.help();
    return 2;
  };
  if (!args.empty() && !args.front().starts_with('-') && app.get_subcommand_no_throw(args.front()) == nullptr)
    return usage_error("unknown subcommand '" + args.front() + "'");
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  Runner run(o, args, in, out);
  try {
    if (*inv) return run.invariants();
    if (*fam) return run.family();
    if (*en) return run.enumerate();
    if (*se) return run.search();
    if (*ve) return run.verify();
    return run.transform();
  } catch (const Error& e) {
    err << "dit: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dit
