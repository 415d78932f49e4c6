#include "ekr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ekr/audit.hpp"
#include "ekr/designs.hpp"
#include "ekr/error.hpp"
#include "ekr/intersection.hpp"
#include "ekr/parameters.hpp"
#include "ekr/search.hpp"

namespace ekr::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string big(const BigInt& x) { return x.str(); }

Json big_list(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(big(x));
  return out;
}

Json element_list(const Semilattice& lattice, const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(lattice.format(x));
  return out;
}

Json index_family(const Semilattice& lattice, const DesignCertificate& cert, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(lattice.format(cert.elements[i]));
  return out;
}

struct Outcome {
  int code = kOk;
  Json inputs = Json::object();
  Json result = Json::object();
  std::string text;
};

struct Globals {
  bool json = false;
  bool quiet = false;
  unsigned threads = 1;
};

unsigned default_threads() {
  if (const char* env = std::getenv("EKR_LATTICE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

Outcome cmd_params(const std::string& family, std::optional<int> r_opt, std::optional<int> s_opt) {
  const FamilySpec spec = parse_family(family);
  const int top = spec.top_rank();
  Outcome o;
  o.inputs["family"] = format_family(spec);
  if (r_opt) o.inputs["r"] = *r_opt;
  if (s_opt) o.inputs["s"] = *s_opt;

  std::ostringstream text;
  text << "family " << format_family(spec) << "  (top rank " << top << ")\n";
  Json thetas = Json::array();
  for (int r = 0; r <= top; ++r) {
    if (r_opt && r != *r_opt) continue;
    thetas.push_back({{"r", r}, {"theta", big(theta(spec, r))}});
    text << "theta(" << r << ") = " << theta(spec, r) << "\n";
  }
  Json pairs = Json::array();
  for (int r = 0; r <= top; ++r)
    for (int s = r; s <= top; ++s) {
      if ((r_opt && r != *r_opt) || (s_opt && s != *s_opt)) continue;
      const auto m = mu(spec, r, s), n = nu(spec, r, s), a = alpha(spec, r, s);
      pairs.push_back({{"r", r}, {"s", s}, {"mu", big(m)}, {"nu", big(n)}, {"alpha", big(a)}});
      text << "r=" << r << " s=" << s << "  mu=" << m << "  nu=" << n << "  alpha=" << a << "\n";
    }
  if ((r_opt && (*r_opt < 0 || *r_opt > top)) || (s_opt && (*s_opt < 0 || *s_opt > top)))
    throw DomainError("rank outside 0.." + std::to_string(top));
  if (r_opt && s_opt && *r_opt > *s_opt) throw DomainError("r must not exceed s");
  o.result["family"] = format_family(spec);
  o.result["top_rank"] = top;
  o.result["numeric_as_string"] = true;
  o.result["theta"] = thetas;
  o.result["pairs"] = pairs;
  o.text = text.str();
  return o;
}

Outcome cmd_audit(const std::string& family, std::uint64_t budget) {
  const FamilySpec spec = parse_family(family);
  Outcome o;
  o.inputs["family"] = format_family(spec);
  o.inputs["budget"] = budget;
  const AuditReport report = audit(spec, {budget});
  const Semilattice lattice(spec);
  std::ostringstream text;
  text << "audit " << format_family(spec) << "  fibers:";
  for (auto s : report.fiber_sizes) text << ' ' << s;
  text << "\n";
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j = {{"id", c.id}, {"passed", c.passed}, {"cases", c.cases}, {"elapsed_ms", c.elapsed_ms}};
    if (!c.passed) {
      j["detail"] = c.detail;
      j["counterexample"] = element_list(lattice, c.counterexample);
    }
    checks.push_back(j);
    text << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.id << "  (" << c.cases << " cases)";
    if (!c.passed) {
      text << "  " << c.detail << "  witness:";
      for (const auto& e : c.counterexample) text << " [" << lattice.format(e) << "]";
    }
    text << "\n";
  }
  o.result["family"] = format_family(spec);
  o.result["fiber_sizes"] = report.fiber_sizes;
  o.result["passed"] = report.passed();
  o.result["checks"] = checks;
  o.code = report.passed() ? kOk : kFailed;
  o.text = text.str();
  return o;
}

Outcome cmd_enumerate(const std::string& family, int rank, bool count_only) {
  const FamilySpec spec = parse_family(family);
  const Semilattice lattice(spec);
  Outcome o;
  o.inputs["family"] = format_family(spec);
  o.inputs["rank"] = rank;
  const auto fiber = lattice.enumerate_fiber(rank);
  o.result["family"] = format_family(spec);
  o.result["rank"] = rank;
  o.result["count"] = fiber.size();
  std::ostringstream text;
  if (!count_only) {
    o.result["elements"] = element_list(lattice, fiber);
    for (const auto& x : fiber) text << lattice.format(x) << "\n";
  }
  text << "# " << fiber.size() << " elements of rank " << rank << "\n";
  o.text = text.str();
  return o;
}

Outcome design_summary(const DesignCertificate& cert, const std::string& path) {
  Outcome o;
  o.result["path"] = path;
  o.result["family"] = format_family(cert.spec);
  o.result["size"] = cert.elements.size();
  o.result["strength"] = cert.strength;
  o.result["numeric_as_string"] = true;
  o.result["indices"] = big_list(cert.indices);
  std::ostringstream text;
  text << "wrote " << path << ": " << cert.elements.size() << " elements of " << format_family(cert.spec)
       << ", strength " << cert.strength << ", lambda_" << cert.strength << " = " << cert.indices.back() << "\n";
  o.text = text.str();
  return o;
}

Outcome cmd_gen(const std::string& kind, const std::string& family, int q, int m, const std::string& output,
                std::ostream& out) {
  DesignCertificate cert;
  Outcome pre;
  pre.inputs["kind"] = kind;
  if (kind == "full-fiber") {
    if (family.empty()) throw DomainError("gen --kind full-fiber requires --family");
    const Semilattice lattice(parse_family(family));
    pre.inputs["family"] = format_family(lattice.spec());
    cert = full_fiber(lattice);
  } else if (kind == "linear-oa") {
    if (q <= 0 || m <= 0) throw DomainError("gen --kind linear-oa requires --q and --m");
    pre.inputs["q"] = q;
    pre.inputs["m"] = m;
    cert = generate_linear_oa(q, m);
  } else {
    throw DomainError("unknown generator kind '" + kind + "' (full-fiber, linear-oa)");
  }
  if (output.empty() || output == "-") {
    write_design(cert, out);
    Outcome o;
    o.code = -1;  // already written
    return o;
  }
  save_design(cert, output);
  Outcome o = design_summary(cert, output);
  o.inputs = pre.inputs;
  o.inputs["output"] = output;
  return o;
}

Outcome cmd_check_design(const std::string& path, std::optional<int> strength) {
  const DesignCertificate cert = load_design(path);
  const Semilattice lattice(cert.spec);
  Outcome o;
  o.inputs["design"] = path;
  if (strength) o.inputs["strength"] = *strength;
  std::ostringstream text;
  o.result["family"] = format_family(cert.spec);
  o.result["size"] = cert.elements.size();
  o.result["declared_strength"] = cert.strength;
  o.result["numeric_as_string"] = true;
  text << path << ": " << cert.elements.size() << " elements of " << format_family(cert.spec)
       << ", declared strength " << cert.strength << " verified\n";
  if (strength) {
    const DesignCheck check = is_design(lattice, cert.elements, *strength);
    o.result["checked_strength"] = *strength;
    o.result["holds"] = check.index.has_value();
    if (check.index) {
      o.result["index"] = big(*check.index);
      text << "strength " << *strength << " holds with lambda_" << *strength << " = " << *check.index << "\n";
    } else {
      o.result["witness"] = {{{"element", lattice.format(*check.low)}, {"count", check.low_count}},
                             {{"element", lattice.format(*check.high)}, {"count", check.high_count}}};
      text << "strength " << *strength << " FAILS: [" << lattice.format(*check.low) << "] below " << check.low_count
           << " members, [" << lattice.format(*check.high) << "] below " << check.high_count << "\n";
      o.code = kFailed;
    }
  }
  o.result["indices"] = big_list(cert.indices);
  for (std::size_t j = 0; j < cert.indices.size(); ++j) text << "  lambda_" << j << " = " << cert.indices[j] << "\n";
  o.text = text.str();
  return o;
}

std::string row_ids(const ConditionRow& row) {
  if (row.cond1 && row.cond2) return "cond1+cond2";
  return row.cond1 ? "cond1" : "cond2";
}

Outcome cmd_ekr_check(const std::string& path, int s, std::optional<int> t) {
  const DesignCertificate cert = load_design(path);
  const ConditionReport rep = check_conditions(cert, s, t);
  Outcome o;
  o.inputs["design"] = path;
  o.inputs["s"] = s;
  if (t) o.inputs["t"] = *t;

  Json rows = Json::array();
  std::ostringstream text;
  text << format_family(cert.spec) << "  s=" << s << " t=" << rep.t << "  lambda_s=" << rep.indices[s]
       << "  lambda_t=" << rep.indices[rep.t] << "\n";
  if (rep.cond1_vacuous) text << "  cond1: vacuous (2s-t < 0)\n";
  for (const auto& row : rep.rows) {
    Json conds = Json::array();
    if (row.cond1) conds.push_back("cond1");
    if (row.cond2) conds.push_back("cond2");
    rows.push_back({{"r", row.r},
                    {"conditions", conds},
                    {"j", row.j},
                    {"lhs", big(row.lhs)},
                    {"rhs", big(row.rhs)},
                    {"holds", row.holds},
                    {"theta_lhs", big(row.theta_lhs)},
                    {"theta_rhs", big(row.theta_rhs)},
                    {"theta_holds", row.theta_holds},
                    {"remark_lhs", big(row.remark_lhs)},
                    {"remark_rhs", big(row.remark_rhs)},
                    {"remark_holds", row.remark_holds}});
    text << "  r=" << row.r << " [" << row_ids(row) << "]  design: " << row.lhs << (row.holds ? " < " : " >= ")
         << row.rhs << (row.holds ? "  ok" : "  FAIL") << "   theta: " << row.theta_lhs
         << (row.theta_holds ? " < " : " >= ") << row.theta_rhs << "   remark: " << row.remark_lhs
         << (row.remark_holds ? " < " : " >= ") << row.remark_rhs << "\n";
  }
  text << "  theorem conditions: " << (rep.theorem_form ? "hold" : "FAIL") << "\n";
  text << "  theta form: " << (rep.theta_form ? "hold" : "fail") << ",  remark form: "
       << (rep.remark_form ? "hold" : "fail")
       << (rep.remark_form != rep.theorem_form ? "  (disagrees with theorem conditions)" : "") << "\n";
  text << "  table row (" << rep.table1.regime << "): " << rep.table1.lhs << (rep.table1.holds ? " > " : " <= ")
       << rep.table1.rhs << "  " << (rep.table1.holds ? "holds" : "fails")
       << (rep.table1_agrees ? "" : "  (disagrees with theorem conditions)") << "\n";

  o.result["family"] = format_family(cert.spec);
  o.result["s"] = s;
  o.result["t"] = rep.t;
  o.result["numeric_as_string"] = true;
  o.result["indices"] = big_list(rep.indices);
  o.result["cond1_vacuous"] = rep.cond1_vacuous;
  o.result["rows"] = rows;
  o.result["theorem_form"] = rep.theorem_form;
  o.result["theta_form"] = rep.theta_form;
  o.result["remark_form"] = rep.remark_form;
  o.result["table1"] = {{"regime", rep.table1.regime},
                        {"lhs", big(rep.table1.lhs)},
                        {"rhs", big(rep.table1.rhs)},
                        {"holds", rep.table1.holds},
                        {"agrees", rep.table1_agrees}};
  o.result["bound"] = big(rep.indices[s]);
  o.code = rep.theorem_form ? kOk : kFailed;
  o.text = text.str();
  return o;
}

Outcome cmd_dr(const std::string& path, int s, int r) {
  const DesignCertificate cert = load_design(path);
  const Semilattice lattice(cert.spec);
  const DrReport rep = compute_dr(cert, s, r);
  Outcome o;
  o.inputs["design"] = path;
  o.inputs["s"] = s;
  o.inputs["r"] = r;
  o.result["family"] = format_family(cert.spec);
  o.result["s"] = s;
  o.result["r"] = r;
  o.result["t"] = rep.t;
  o.result["numeric_as_string"] = true;
  o.result["d_r"] = rep.value ? Json(*rep.value) : Json(nullptr);
  o.result["bound"] = big(rep.bound);
  o.result["bound_case"] = rep.bound_case;
  o.result["within_bound"] = rep.within_bound;
  o.result["pairs"] = rep.pairs;
  if (rep.x) o.result["witness"] = {{"x", lattice.format(*rep.x)}, {"y", lattice.format(*rep.y)}};
  std::ostringstream text;
  if (rep.value) {
    text << "d_" << r << " = " << *rep.value << "  (bound " << rep.bound << " for " << rep.bound_case << ")  "
         << (rep.within_bound ? "ok" : "EXCEEDS BOUND") << "\n";
    text << "  attained at x=[" << lattice.format(*rep.x) << "] y=[" << lattice.format(*rep.y) << "]\n";
  } else {
    text << "d_" << r << ": no pair meets at rank " << r << "\n";
  }
  o.code = rep.within_bound ? kOk : kFailed;
  o.text = text.str();
  return o;
}

Outcome cmd_search_max(const std::string& path, int s, bool all, bool deterministic, std::uint64_t node_budget,
                       unsigned threads) {
  const DesignCertificate cert = load_design(path);
  const Semilattice lattice(cert.spec);
  SearchOptions options;
  options.enumerate_all = all;
  options.deterministic = deterministic;
  options.node_budget = node_budget;
  options.threads = threads;
  const SearchResult res = max_intersecting(cert, s, options);

  Outcome o;
  o.inputs["design"] = path;
  o.inputs["s"] = s;
  o.inputs["all"] = all;
  o.inputs["deterministic"] = deterministic;
  if (node_budget != 0) o.inputs["node_budget"] = node_budget;
  const bool proved = res.status == SearchStatus::proved_optimal;
  o.result["family"] = format_family(cert.spec);
  o.result["s"] = s;
  o.result["status"] = proved ? "proved-optimal" : "budget-exhausted";
  o.result["optimum"] = res.optimum;
  o.result["seed_size"] = res.seed_size;
  if (s <= cert.strength) {
    o.result["numeric_as_string"] = true;
    o.result["lambda_s"] = big(ekr_bound(cert, s));
  }
  if (deterministic) o.result["nodes"] = res.nodes;
  o.result["witness"] = index_family(lattice, cert, res.witness);
  std::ostringstream text;
  text << (proved ? "optimum " : "best found ") << res.optimum << " (" << (proved ? "proved optimal" : "node budget exhausted")
       << ")";
  if (s <= cert.strength) text << ", lambda_" << s << " = " << ekr_bound(cert, s);
  text << "\n  witness:";
  for (auto i : res.witness) text << " [" << lattice.format(cert.elements[i]) << "]";
  text << "\n";
  if (res.all_maximum) {
    Json families = Json::array();
    for (const auto& f : *res.all_maximum) families.push_back(index_family(lattice, cert, f));
    o.result["maximum_count"] = res.all_maximum->size();
    o.result["all_overflow"] = res.all_overflow;
    o.result["all_maximum"] = families;
    text << "  " << res.all_maximum->size() << " maximum families" << (res.all_overflow ? " (cap reached)" : "")
         << "\n";
  }
  o.code = proved ? kOk : kBudget;
  o.text = text.str();
  return o;
}

Outcome cmd_verify_extremal(const std::string& path, const std::string& family_path, int s) {
  const DesignCertificate cert = load_design(path);
  const Semilattice lattice(cert.spec);
  std::ifstream in(family_path);
  if (!in) throw ParseError("cannot open family file " + family_path);
  const auto family = read_family_file(lattice, in);
  const ExtremalVerdict verdict = verify_extremal(cert, family, s);

  Outcome o;
  o.inputs["design"] = path;
  o.inputs["family_file"] = family_path;
  o.inputs["s"] = s;
  o.result["family"] = format_family(cert.spec);
  o.result["s"] = s;
  o.result["size"] = verdict.size;
  o.result["numeric_as_string"] = true;
  o.result["bound"] = big(verdict.bound);
  o.result["status"] = std::string(to_string(verdict.status));
  if (verdict.center) o.result["center"] = lattice.format(*verdict.center);
  std::optional<bool> theorem;
  if (s < cert.strength) theorem = check_conditions(cert, s).theorem_form;
  o.result["theorem_conditions"] = theorem ? Json(*theorem) : Json(nullptr);

  std::ostringstream text;
  text << "|Z| = " << verdict.size << ", lambda_" << s << " = " << verdict.bound << ": " << to_string(verdict.status);
  if (verdict.center) text << " (center [" << lattice.format(*verdict.center) << "])";
  text << "\n";
  const bool inconsistent = verdict.status == ExtremalStatus::exceeds_bound ||
                            (verdict.status == ExtremalStatus::extremal_but_not_star && theorem.value_or(false));
  o.code = inconsistent ? kFailed : kOk;
  o.text = text.str();
  return o;
}

}  // namespace

std::string version() {
#ifdef EKR_VERSION
  return EKR_VERSION;
#else
  return "0.0.0";
#endif
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for intersection theorems on designs in regular semilattices", "ekr-lattice"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.threads = default_threads();
  app.add_flag("--json", g.json, "Emit a JSON report");
  app.add_flag("--quiet", g.quiet, "Print nothing; report through the exit code");
  app.add_option("--threads", g.threads, "Worker threads (default: EKR_LATTICE_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag_callback("--version", [&] { throw CLI::CallForVersion(version(), 0); });

  std::string family, design, family_file, kind, output;
  std::optional<int> r_opt, s_opt, t_opt, strength_opt;
  int s = 0, r = 0, rank = 0, q = 0, m = 0;
  std::uint64_t budget = AuditOptions{}.budget, node_budget = 0;
  bool all = false, deterministic = false, count_only = false;

  auto* params = app.add_subcommand("params", "Regularity constants mu, nu, theta, alpha");
  params->add_option("--family", family, "Family spec, e.g. johnson:v=7,m=3")->required();
  params->add_option("--r", r_opt, "Lower rank");
  params->add_option("--s", s_opt, "Upper rank");

  auto* audit_cmd = app.add_subcommand("audit", "Exhaustively verify the semilattice axioms and regularity");
  audit_cmd->add_option("--family", family, "Family spec")->required();
  audit_cmd->add_option("--budget", budget, "Comparison budget");

  auto* enumerate = app.add_subcommand("enumerate", "List one fiber in canonical order");
  enumerate->add_option("--family", family, "Family spec")->required();
  enumerate->add_option("--rank", rank, "Rank of the fiber")->required();
  enumerate->add_flag("--count", count_only, "Only count");

  auto* gen = app.add_subcommand("gen", "Generate a design file");
  gen->add_option("--kind", kind, "full-fiber or linear-oa")->required();
  gen->add_option("--family", family, "Family spec (full-fiber)");
  gen->add_option("--q", q, "Prime alphabet size (linear-oa)");
  gen->add_option("--m", m, "Number of columns (linear-oa)");
  gen->add_option("-o,--output", output, "Output path (default: stdout)");

  auto* check = app.add_subcommand("check-design", "Load a design and verify its strength");
  check->add_option("--design", design, "Design file")->required();
  check->add_option("--strength", strength_opt, "Strength to test");

  auto* ekr_check = app.add_subcommand("ekr-check", "Evaluate the intersection theorem hypotheses");
  ekr_check->add_option("--design", design, "Design file")->required();
  ekr_check->add_option("--s", s, "Intersection parameter s")->required();
  ekr_check->add_option("--t", t_opt, "Strength t (default: certificate strength)");

  auto* dr = app.add_subcommand("dr", "Exact d_r against its bound");
  dr->add_option("--design", design, "Design file")->required();
  dr->add_option("--s", s, "Intersection parameter s")->required();
  dr->add_option("--r", r, "Meet rank r")->required();

  auto* search = app.add_subcommand("search-max", "Exact maximum s-intersecting subfamily");
  search->add_option("--design", design, "Design file")->required();
  search->add_option("--s", s, "Intersection parameter s")->required();
  search->add_flag("--all", all, "Enumerate every maximum family");
  search->add_flag("--deterministic", deterministic, "Single thread, least witness");
  search->add_option("--node-budget", node_budget, "Branch node budget (0 = unlimited)");

  auto* extremal = app.add_subcommand("verify-extremal", "Classify an intersecting family against the bound");
  extremal->add_option("--design", design, "Design file")->required();
  extremal->add_option("--family-file", family_file, "One element per line")->required();
  extremal->add_option("--s", s, "Intersection parameter s")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome o;
  try {
    if (command == "params") o = cmd_params(family, r_opt, s_opt);
    else if (command == "audit") o = cmd_audit(family, budget);
    else if (command == "enumerate") o = cmd_enumerate(family, rank, count_only);
    else if (command == "gen") o = cmd_gen(kind, family, q, m, output, out);
    else if (command == "check-design") o = cmd_check_design(design, strength_opt);
    else if (command == "ekr-check") o = cmd_ekr_check(design, s, t_opt);
    else if (command == "dr") o = cmd_dr(design, s, r);
    else if (command == "search-max") o = cmd_search_max(design, s, all, deterministic, node_budget, g.threads);
    else o = cmd_verify_extremal(design, family_file, s);
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (o.code < 0) return kOk;
  if (g.quiet) return o.code;
  if (g.json) {
    Json report;
    report["command"] = command;
    report["version"] = version();
    report["inputs"] = o.inputs;
    report["result"] = o.result;
    report["exit_code"] = o.code;
    out << report.dump(2) << "\n";
  } else {
    out << o.text;
  }
  return o.code;
}

}  // namespace ekr::cli
