#include "convexmod/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "convexmod/json_io.hpp"
#include "convexmod/laws.hpp"
#include "convexmod/terms.hpp"

namespace convexmod {

namespace {

enum class Format { text, json, csv };

struct Config {
  std::string semiring = "qplus";
  std::string vars;
  std::string format = "text";
  std::string file;
  std::string input;
  std::vector<std::string> terms;
  std::string suite;
  unsigned xsize = 2;
  unsigned trials = 50;
  std::uint64_t seed = 0;
  unsigned value_bound = 2;
  bool compare = false;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  return Format::text;
}

std::vector<Symbol> split_vars(const std::string& s) {
  std::vector<Symbol> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Terms from the positional arguments followed by those in --file, one per
// line, with '#' starting a comment.
std::vector<std::string> collect_terms(const Config& cfg) {
  std::vector<std::string> out = cfg.terms;
  if (!cfg.file.empty()) {
    std::stringstream ss(read_file(cfg.file));
    std::string line;
    while (std::getline(ss, line)) {
      line = line.substr(0, line.find('#'));
      if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
  }
  return out;
}

json rendering(const ConvexSet& a, const std::vector<Symbol>& vars) {
  if (a.semiring().id() == SemiringId::qplus && vars.size() == 1) {
    auto iv = render_interval(a, vars[0]);
    if (iv.empty) return {{"kind", "interval"}, {"empty", true}};
    return {{"kind", "interval"}, {"empty", false}, {"lo", iv.lo.str()}, {"hi", iv.hi.str()}};
  }
  if (a.semiring().id() == SemiringId::qplus && vars.size() == 2) {
    json vs = json::array();
    for (auto& [x, y] : render_polygon(a, vars[0], vars[1])) vs.push_back({x.str(), y.str()});
    return {{"kind", "polygon"}, {"vars", vars}, {"vertices", vs}};
  }
  return {{"kind", "generators"}};
}

std::string rendering_text(const json& r) {
  if (r["kind"] == "interval")
    return r["empty"].get<bool>() ? "interval empty"
                                  : "interval [" + r["lo"].get<std::string>() + ", " +
                                        r["hi"].get<std::string>() + "]";
  if (r["kind"] == "polygon") {
    std::string s = "polygon";
    for (auto& v : r["vertices"])
      s += " (" + v[0].get<std::string>() + "," + v[1].get<std::string>() + ")";
    return s;
  }
  return "";
}

void emit_set(const ConvexSet& a, const std::vector<Symbol>& vars, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::csv: out << convex_to_csv(a, vars); break;
    case Format::json: {
      json j = convex_to_json(a);
      json r = rendering(a, vars);
      j["kind"] = r["kind"];
      for (auto& [k, v] : r.items())
        if (k != "kind") j[k] = v;
      out << j.dump() << '\n';
      break;
    }
    case Format::text: {
      out << to_string(a) << '\n';
      auto text = rendering_text(rendering(a, vars));
      if (!text.empty()) out << text << '\n';
      break;
    }
  }
}

SymbolSet var_set(const std::vector<Symbol>& vars) { return {vars.begin(), vars.end()}; }

int cmd_eval(const Config& cfg, std::ostream& out) {
  Semiring sr(parse_semiring_id(cfg.semiring));
  auto vars = split_vars(cfg.vars);
  auto terms = collect_terms(cfg);
  if (terms.empty()) throw CLI::ValidationError("eval", "no term given");
  for (auto& text : terms) {
    auto t = parse_term(text, sr);
    emit_set(eval(t, sr, var_set(vars)), vars, parse_format(cfg.format), out);
  }
  return 0;
}

int cmd_eq(const Config& cfg, std::ostream& out) {
  Semiring sr(parse_semiring_id(cfg.semiring));
  auto vars = split_vars(cfg.vars);
  auto terms = collect_terms(cfg);
  if (terms.size() != 2) throw CLI::ValidationError("eq", "expected exactly two terms");
  auto a = eval(parse_term(terms[0], sr), sr, var_set(vars));
  auto b = eval(parse_term(terms[1], sr), sr, var_set(vars));
  bool equal = cs_equal(a, b);
  json w;
  if (!equal) {
    // A generator of one side that the other side misses.
    for (auto& g : a.generators())
      if (w.is_null() && !b.contains(g)) w = {{"side", "left"}, {"generator", finsupp_to_json(g)}};
    for (auto& g : b.generators())
      if (w.is_null() && !a.contains(g)) w = {{"side", "right"}, {"generator", finsupp_to_json(g)}};
  }
  if (parse_format(cfg.format) == Format::json) {
    json j{{"equal", equal}, {"left", convex_to_json(a)}, {"right", convex_to_json(b)}};
    if (!equal) j["witness"] = w;
    out << j.dump() << '\n';
  } else {
    out << (equal ? "equal" : "unequal") << '\n';
    if (!equal)
      out << "only in " << w["side"].get<std::string>() << ": " << w["generator"].dump() << '\n';
  }
  return equal ? 0 : 1;
}

int cmd_laws(const Config& cfg, std::ostream& out) {
  SuiteOptions opt;
  opt.sr = Semiring(parse_semiring_id(cfg.semiring));
  opt.xsize = cfg.xsize;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  opt.value_bound = cfg.value_bound;
  if (const char* env = std::getenv("CONVEXMOD_SEED")) {
    try {
      opt.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("CONVEXMOD_SEED", "not a 64-bit natural: " + std::string(env));
    }
  }

  std::vector<LawReport> reports;
  if (cfg.suite == "weakdist") reports = check_weak_law(opt);
  else if (cfg.suite == "naturality") reports = check_naturality(opt);
  else if (cfg.suite == "pentagon") reports = check_pentagon(opt);
  else reports = check_appendix_a(opt);

  bool ok = true;
  for (auto& r : reports) {
    ok = ok && r.passed();
    json j = r.to_json();
    j["suite"] = cfg.suite;
    j["semiring"] = cfg.semiring;
    j["seed"] = opt.seed;
    if (parse_format(cfg.format) == Format::text) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.law << " (expected "
          << (r.expect_holds ? "holds" : "fails") << ", observed " << (r.holds ? "holds" : "fails")
          << ", " << r.instances << " instances)";
      if (!r.detail.empty()) out << " [" << r.detail << "]";
      out << '\n';
      if (!r.witness.is_null()) out << "  witness: " << r.witness.dump() << '\n';
    } else {
      out << j.dump() << '\n';
    }
  }
  return ok ? 0 : 1;
}

// Every subset of the union support, with value 1, that lies in the set.
std::vector<FinSupp> bool_points(const ConvexSet& a, const SetWeighting& phi) {
  SymbolSet xs;
  for (auto& [s, w] : phi) xs.insert(s.begin(), s.end());
  std::vector<Symbol> v(xs.begin(), xs.end());
  std::vector<FinSupp> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << v.size()); ++mask) {
    std::vector<std::pair<Symbol, Scalar>> e;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask >> i & 1) e.emplace_back(v[i], Scalar(1));
    FinSupp p(a.semiring(), std::move(e));
    if (a.contains(p)) pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

int cmd_delta(const Config& cfg, std::ostream& out) {
  Semiring sr(parse_semiring_id(cfg.semiring));
  if (cfg.input.empty()) throw CLI::ValidationError("delta", "--input is required");
  auto phi = set_weighting_from_json(sr, json::parse(read_file(cfg.input)));
  Format fmt = parse_format(cfg.format);
  json j{{"input", set_weighting_to_json(phi)}};
  bool ok = true;

  if (sr.id() == SemiringId::nat) {
    auto bf = delta_bruteforce(phi);
    json pts = json::array();
    for (auto& p : bf) pts.push_back(finsupp_to_json(p));
    j["delta"] = {{"semiring", "nat"}, {"elements", pts}};
    if (cfg.compare) {
      auto c = choice_set(phi);
      bool contains = std::includes(bf.begin(), bf.end(), c.begin(), c.end());
      j["compare"] = {{"choice_set_size", c.size()},
                      {"bruteforce_size", bf.size()},
                      {"choice_set_included", contains},
                      {"strict", contains && bf.size() > c.size()}};
      ok = contains;
    }
  } else {
    auto hull = delta_hull(phi);
    j["delta"] = convex_to_json(hull);
    if (cfg.compare) {
      if (sr.id() == SemiringId::qplus)
        throw CLI::ValidationError("--compare-bruteforce",
                                   "use delta_hull + delta_witness_check over qplus");
      auto bf = delta_bruteforce(phi);
      auto closure = bool_points(hull, phi);
      ok = bf == closure;
      j["compare"] = {{"bruteforce_size", bf.size()}, {"hull_points", closure.size()}, {"agree", ok}};
    }
  }

  if (fmt == Format::json) {
    out << j.dump() << '\n';
  } else {
    if (sr.id() == SemiringId::nat) {
      for (auto& p : delta_bruteforce(phi)) out << to_string(p) << '\n';
    } else {
      out << to_string(delta_hull(phi)) << '\n';
    }
    if (cfg.compare) out << "compare: " << j["compare"].dump() << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_render(const Config& cfg, std::ostream& out) {
  Semiring sr(parse_semiring_id(cfg.semiring));
  auto vars = split_vars(cfg.vars);
  Format fmt = parse_format(cfg.format);
  std::vector<ConvexSet> sets;
  if (!cfg.input.empty()) {
    sets.push_back(convex_from_json(json::parse(read_file(cfg.input))));
    if (vars.empty()) {
      SymbolSet xs;
      for (auto& g : sets.back().generators())
        for (auto& [x, v] : g) xs.insert(x);
      vars.assign(xs.begin(), xs.end());
    }
  }
  for (auto& t : collect_terms(cfg)) sets.push_back(eval(parse_term(t, sr), sr, var_set(vars)));
  if (sets.empty()) throw CLI::ValidationError("render", "nothing to render");
  for (auto& a : sets) {
    if (fmt == Format::csv) {
      if (a.semiring().id() == SemiringId::qplus && vars.size() == 2) {
        // Polygon vertices in drawing order.
        auto sorted_vars = vars;
        std::sort(sorted_vars.begin(), sorted_vars.end());
        out << sorted_vars[0] << ',' << sorted_vars[1] << '\n';
        for (auto& [x, y] : render_polygon(a, sorted_vars[0], sorted_vars[1]))
          out << x.str() << ',' << y.str() << '\n';
      } else {
        out << convex_to_csv(a, vars);
      }
    } else if (fmt == Format::json) {
      json r = rendering(a, vars);
      r["generators"] = convex_to_json(a)["generators"];
      out << r.dump() << '\n';
    } else {
      auto text = rendering_text(rendering(a, vars));
      out << (text.empty() ? to_string(a) : text) << '\n';
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finitely generated convex sets over semirings, the weak distributive law of "
               "powerset over semimodules, and term equality."};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--semiring", cfg.semiring, "bool, qplus or nat")
        ->check(CLI::IsMember({"bool", "qplus", "nat"}));
    sub->add_option("--format", cfg.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto term_input = [&](CLI::App* sub) {
    sub->add_option("--vars", cfg.vars, "comma separated variable list");
    sub->add_option("--file", cfg.file, "file with one term per line, '#' comments");
    sub->add_option("terms", cfg.terms, "terms");
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate terms to convex sets");
  common(eval_cmd);
  term_input(eval_cmd);

  auto* eq_cmd = app.add_subcommand("eq", "decide equality of two terms");
  common(eq_cmd);
  term_input(eq_cmd);

  auto* laws_cmd = app.add_subcommand("laws", "run a law suite");
  common(laws_cmd);
  laws_cmd->add_option("--suite", cfg.suite, "weakdist, pentagon, naturality or appendixA")
      ->required()
      ->check(CLI::IsMember({"weakdist", "pentagon", "naturality", "appendixA"}));
  laws_cmd->add_option("--xsize", cfg.xsize, "size of X")->check(CLI::Range(1u, 4u));
  laws_cmd->add_option("--trials", cfg.trials, "random instances")->check(CLI::PositiveNumber);
  laws_cmd->add_option("--seed", cfg.seed, "seed (CONVEXMOD_SEED overrides)");
  laws_cmd->add_option("--value-bound", cfg.value_bound, "largest nat weight enumerated")
      ->check(CLI::Range(1u, 4u));

  auto* delta_cmd = app.add_subcommand("delta", "compute delta of a weighting of sets");
  common(delta_cmd);
  delta_cmd->add_option("--input", cfg.input, "JSON file {\"weights\": [...]}")->required();
  delta_cmd->add_flag("--compare-bruteforce", cfg.compare, "cross-check with the definition");

  auto* render_cmd = app.add_subcommand("render", "emit interval or polygon data");
  common(render_cmd);
  term_input(render_cmd);
  render_cmd->add_option("--input", cfg.input, "JSON file with a convex set");

  std::vector<const char*> argv{"convexmod"};
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(cfg, out);
    if (eq_cmd->parsed()) return cmd_eq(cfg, out);
    if (laws_cmd->parsed()) return cmd_laws(cfg, out);
    if (delta_cmd->parsed()) return cmd_delta(cfg, out);
    return cmd_render(cfg, out);
  } catch (const std::exception& e) {
    if (parse_format(cfg.format) == Format::json)
      err << json{{"error", e.what()}}.dump() << '\n';
    else
      err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace convexmod
