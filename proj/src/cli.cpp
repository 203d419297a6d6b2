#include "moduli/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "moduli/branchlocus.hpp"
#include "moduli/fixedloci.hpp"
#include "moduli/io.hpp"
#include "moduli/oracle.hpp"
#include "moduli/reallocus.hpp"

namespace moduli::cli {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { table, json, dot };

ojson ordered(const nlohmann::json& j) { return ojson::parse(j.dump()); }

ojson components_json(const ComponentGraph& g) {
  ojson out = ojson::array();
  for (const auto& comp : g.components()) {
    ojson c = ojson::array();
    for (const auto v : comp) {
      c.push_back(g.vertices()[v]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string join_component(const ComponentGraph& g, const std::vector<std::size_t>& comp) {
  std::string s = "{";
  for (std::size_t i = 0; i < comp.size(); ++i) {
    s += (i ? ", " : "") + g.vertices()[comp[i]];
  }
  return s + "}";
}

void print_graph_table(std::ostream& out, int n, int count, const ComponentGraph& g) {
  out << "n=" << n << " components=" << count << "\n";
  for (const auto& comp : g.components()) {
    out << "  " << join_component(g, comp) << "\n";
  }
  out << "edges:";
  for (const auto& [a, b] : g.edges()) {
    out << " " << g.vertices()[a] << "--" << g.vertices()[b];
  }
  out << "\n";
}

void emit_graph(std::ostream& out, Format format, int n, int count, const ComponentGraph& g, const std::string& name) {
  switch (format) {
  case Format::dot: out << g.to_dot(name); break;
  case Format::json: {
    ojson j;
    j["n"] = n;
    j["count"] = count;
    j["components"] = components_json(g);
    j["vertices"] = g.vertices();
    ojson edges = ojson::array();
    for (const auto& [a, b] : g.edges()) {
      edges.push_back({g.vertices()[a], g.vertices()[b]});
    }
    j["edges"] = edges;
    out << j.dump(2) << "\n";
    break;
  }
  case Format::table: print_graph_table(out, n, count, g); break;
  }
}

template <class F> double theta_residual(const Permutation& s, const OmegaPoint<F>& p) {
  return residual(apply_theta(s, p, Tolerance{0.0}), p);
}

template <class F> ojson fixed_witness_json(const FixedClass& cls, int n, int alpha, FixedPointChoice choice,
                                            Tolerance tol) {
  const auto point = default_witness<F>(cls, n, alpha, choice, tol);
  const auto rep = canonical_rep(cls, n);
  ojson j = ordered(certified_json(point, "theta", {rep}, {theta_residual(rep, point)}));
  j["class"] = {{"m", cls.m}, {"r", cls.r}, {"case", std::string(1, to_char(cls.fixed_case))}};
  j["alpha"] = alpha;
  j["choice"] = choice == FixedPointChoice::primary ? "primary" : "secondary";
  return j;
}

template <class F> ojson real_witness_json(int n, const RealComponentLabel& label, Tolerance tol) {
  const auto point = default_real_witness<F>(n, label, tol);
  const auto sym = Symmetry::standard(n, label.beta);
  const double res = residual(apply_symmetry(sym, point, Tolerance{0.0}), point);
  ojson j = ordered(certified_json(point, "symmetry", {sym.twist()}, {res}));
  j["label"] = label.to_string();
  return j;
}

struct Options {
  std::string format = "table";
  std::optional<int> n;
  std::optional<int> genus;
  int from = 4;
  int to = 100;
  bool branch = false;
  bool real = false;
  int m = 2;
  int r = 0;
  std::string fixed_case = "A";
  int alpha = 1;
  std::string choice = "primary";
  bool floating = false;
  std::string label = "0";
  int b1 = 0;
  int b2 = 1;
  int solution = 0;
};

int resolve_n(const Options& o) {
  if (o.genus) {
    if (o.n) {
      throw std::invalid_argument("give either n or --genus, not both");
    }
    return 2 * *o.genus + 1;
  }
  if (!o.n) {
    throw std::invalid_argument("n is required");
  }
  return *o.n;
}

Format parse_format(const std::string& s) {
  if (s == "json") {
    return Format::json;
  }
  return s == "dot" ? Format::dot : Format::table;
}

int cmd_branch(const Options& o, std::ostream& out) {
  const int n = resolve_n(o);
  const int count = branch_component_count(n);
  emit_graph(out, parse_format(o.format), n, count, stratum_graph(n), "B_" + std::to_string(n));
  return kExitOk;
}

int cmd_real(const Options& o, std::ostream& out) {
  const int n = resolve_n(o);
  emit_graph(out, parse_format(o.format), n, real_component_count(n), intersection_graph(n), "G_" + std::to_string(n));
  return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out) {
  if (o.from < 4 || o.to < o.from) {
    throw std::invalid_argument("census needs 4 <= --from <= --to");
  }
  if (o.branch && o.real) {
    throw std::invalid_argument("choose one of --branch and --real");
  }
  const bool branch = o.branch;
  const Format format = parse_format(o.format);
  if (format == Format::dot) {
    throw std::invalid_argument("census has no DOT output");
  }
  ojson rows = ojson::array();
  std::vector<int> disconnected;
  if (format == Format::table) {
    out << std::left << std::setw(6) << "n" << std::setw(7) << "count" << "connected\n";
  }
  for (int n = o.from; n <= o.to; ++n) {
    const auto g = branch ? stratum_graph(n) : intersection_graph(n);
    const int count = branch ? branch_component_count(n) : real_component_count(n);
    if (count > 1) {
      disconnected.push_back(n);
    }
    if (format == Format::table) {
      out << std::setw(6) << n << std::setw(7) << count << (count == 1 ? "yes" : "no") << "\n";
    } else {
      rows.push_back({{"n", n}, {"count", count}, {"components", components_json(g)}});
    }
  }
  if (format == Format::table) {
    out << "disconnected: " << disconnected.size() << " values:";
    for (const int n : disconnected) {
      out << " " << n;
    }
    out << "\n";
  } else {
    ojson j;
    j["locus"] = branch ? "branch" : "real";
    j["from"] = o.from;
    j["to"] = o.to;
    j["rows"] = rows;
    j["disconnected"] = disconnected;
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_witness_fixed(const Options& o, std::ostream& out) {
  const int n = resolve_n(o);
  const FixedClass cls{o.m, o.r, parse_case(o.fixed_case)};
  const auto choice = o.choice == "secondary" ? FixedPointChoice::secondary : FixedPointChoice::primary;
  if (o.choice != "primary" && o.choice != "secondary") {
    throw std::invalid_argument("--choice must be primary or secondary");
  }
  const int alpha = cls.m == 2 ? 0 : o.alpha;
  const Tolerance tol = Tolerance::from_environment();
  if (!o.floating) {
    try {
      out << fixed_witness_json<GaussianRational>(cls, n, alpha, choice, tol).dump(2) << "\n";
      return kExitOk;
    } catch (const InexactError&) {
      // irrational anchor or root: fall through to floating
    }
  }
  out << fixed_witness_json<Complex>(cls, n, alpha, choice, tol).dump(2) << "\n";
  return kExitOk;
}

int cmd_witness_real(const Options& o, std::ostream& out) {
  const int n = resolve_n(o);
  RealComponentLabel label;
  if (o.label == "A1") {
    label = RealComponentLabel::a1(n);
  } else {
    std::size_t used = 0;
    const int beta = std::stoi(o.label, &used);
    if (used != o.label.size()) {
      throw std::invalid_argument("label must be a beta or A1");
    }
    label = RealComponentLabel::f(beta);
  }
  const Tolerance tol = Tolerance::from_environment();
  out << (o.floating ? real_witness_json<Complex>(n, label, tol) : real_witness_json<GaussianRational>(n, label, tol))
             .dump(2)
      << "\n";
  return kExitOk;
}

int cmd_witness_klein(const Options& o, std::ostream& out) {
  const auto w = klein_witness(resolve_n(o));
  ojson j = ordered(certified_json(w.point, "theta", w.permutations, w.residuals));
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_witness_dihedral(const Options& o, std::ostream& out) {
  const int n = resolve_n(o);
  const auto solutions = delta_system_solve(n, o.b1, o.b2);
  if (solutions.empty()) {
    throw std::invalid_argument("F(" + std::to_string(o.b1) + ") and F(" + std::to_string(o.b2) +
                                ") do not meet for n = " + std::to_string(n));
  }
  if (o.solution < 0 || o.solution >= static_cast<int>(solutions.size())) {
    throw std::invalid_argument("--solution out of range (have " + std::to_string(solutions.size()) + ")");
  }
  const auto& sol = solutions[static_cast<std::size_t>(o.solution)];
  const Tolerance tol = Tolerance::from_environment();
  std::optional<Certified<Complex>> w;
  for (int attempt = 0; attempt < 8 && !w; ++attempt) {
    try {
      w = dihedral_witness(n, o.b1, o.b2, sol, attempt, tol);
    } catch (const DegenerateConfiguration&) {
    }
  }
  if (!w) {
    throw std::invalid_argument("no collision-free dihedral configuration found");
  }
  ojson j = ordered(certified_json(w->point, "symmetry", w->permutations, w->residuals));
  j["solution"] = {{"m", sol.m}, {"gamma", sol.gamma}, {"delta1", sol.delta1}, {"delta2", sol.delta2}};
  j["rotation_order"] = rotation_order(*w);
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const int top = resolve_n(o);
  if (top < 4) {
    throw std::invalid_argument("verify needs n >= 4");
  }
  long pairs = 0;
  ojson mismatches = ojson::array();
  for (int n = 4; n <= top; ++n) {
    for (int b1 = 0; b1 <= max_beta(n); ++b1) {
      for (int b2 = b1 + 1; b2 <= max_beta(n); ++b2) {
        ++pairs;
        if (delta_system_solve(n, b1, b2).empty() == intersects(n, b1, b2)) {
          mismatches.push_back({n, b1, b2});
        }
      }
    }
    branch_component_count(n); // throws on a graph/closed-form disagreement
  }
  if (parse_format(o.format) == Format::json) {
    ojson j;
    j["to"] = top;
    j["pairs"] = pairs;
    j["mismatches"] = mismatches;
    out << j.dump(2) << "\n";
  } else {
    out << "checked " << pairs << " beta pairs for 4 <= n <= " << top << ": " << mismatches.size()
        << " mismatches\n";
  }
  return mismatches.empty() ? kExitOk : kExitCrossCheck;
}

int cmd_strata(const Options& o, std::ostream& out) {
  const int n = resolve_n(o);
  const Format format = parse_format(o.format);
  ojson rows = ojson::array();
  if (format == Format::table) {
    out << std::left << std::setw(12) << "stratum" << std::setw(4) << "m" << std::setw(4) << "r" << std::setw(6)
        << "case" << std::setw(5) << "dim" << std::setw(12) << "components"
        << "representative\n";
  }
  for (const auto& s : enumerate_strata(n)) {
    const auto report = fixed_locus_report(s.cls, n);
    const auto rep = canonical_rep(s.cls, n).to_string();
    if (format == Format::table) {
      out << std::setw(12) << s.label() << std::setw(4) << s.cls.m << std::setw(4) << s.cls.r << std::setw(6)
          << to_char(s.cls.fixed_case) << std::setw(5) << report.dimension << std::setw(12)
          << report.component_count << rep << "\n";
    } else {
      rows.push_back({{"label", s.label()},
                      {"m", s.cls.m},
                      {"r", s.cls.r},
                      {"case", std::string(1, to_char(s.cls.fixed_case))},
                      {"dimension", report.dimension},
                      {"fixed_locus_components", report.component_count},
                      {"representative", rep}});
    }
  }
  if (format != Format::table) {
    out << ojson{{"n", n}, {"strata", rows}}.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_symmetries(const Options& o, std::ostream& out) {
  const int n = resolve_n(o);
  const Format format = parse_format(o.format);
  ojson rows = ojson::array();
  for (int beta = 0; beta <= max_beta(n); ++beta) {
    const auto twist = Symmetry::standard(n, beta).twist().to_string();
    std::string pieces = "F_" + std::to_string(beta);
    if (2 * beta == n + 1) {
      pieces = "A1, A2/A3 (F_" + std::to_string(beta) + ")";
    }
    rows.push_back({{"beta", beta}, {"twist", twist}, {"components", pieces}});
  }
  if (format == Format::table) {
    out << "n=" << n << " symmetry classes=" << symmetry_class_count(n) << "\n";
    for (const auto& r : rows) {
      out << "  beta=" << r["beta"].get<int>() << "  " << r["twist"].get<std::string>() << " o J  "
          << r["components"].get<std::string>() << "\n";
    }
  } else {
    out << ojson{{"n", n}, {"count", symmetry_class_count(n)}, {"symmetries", rows}}.dump(2) << "\n";
  }
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric-group action on marked-sphere configurations: branch and real loci"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "dot"}))
      ->capture_default_str();

  auto add_n = [&](CLI::App* cmd, bool genus) {
    auto* opt = cmd->add_option("n", o.n, "Number of marked points minus one")->check(CLI::PositiveNumber);
    if (genus) {
      cmd->add_option("--genus", o.genus, "Use n = 2g+1")->excludes(opt);
    }
  };

  auto* branch = app.add_subcommand("branch", "Branch-locus components and stratum graph");
  add_n(branch, true);
  auto* real = app.add_subcommand("real", "Real-locus intersection graph and components");
  add_n(real, true);

  auto* census = app.add_subcommand("census", "Component counts over a range of n");
  census->add_option("--from", o.from)->capture_default_str();
  census->add_option("--to", o.to)->capture_default_str();
  census->add_flag("--branch", o.branch, "Branch locus");
  census->add_flag("--real", o.real, "Real locus (default)");

  auto* witness = app.add_subcommand("witness", "Certified witness points (JSON)");
  witness->require_subcommand(1);
  auto* w_fixed = witness->add_subcommand("fixed", "Point of Fix(theta(s)) for a class (m, r, case)");
  add_n(w_fixed, false);
  w_fixed->add_option("m", o.m)->required();
  w_fixed->add_option("r", o.r)->required();
  w_fixed->add_option("case", o.fixed_case)->required()->check(CLI::IsMember({"A", "B", "C"}));
  w_fixed->add_option("--alpha", o.alpha)->capture_default_str();
  w_fixed->add_option("--choice", o.choice)->check(CLI::IsMember({"primary", "secondary"}));
  w_fixed->add_flag("--floating", o.floating, "Skip the exact backend");
  auto* w_real = witness->add_subcommand("real", "Point of Fix(S) for a real component");
  add_n(w_real, false);
  w_real->add_option("label", o.label, "beta or A1")->required();
  w_real->add_flag("--floating", o.floating, "Use the floating backend");
  auto* w_klein = witness->add_subcommand("klein", "Point fixed by both involution classes (odd n)");
  add_n(w_klein, false);
  auto* w_dihedral = witness->add_subcommand("dihedral", "Common fixed point of two symmetries");
  add_n(w_dihedral, false);
  w_dihedral->add_option("b1", o.b1)->required();
  w_dihedral->add_option("b2", o.b2)->required();
  w_dihedral->add_option("--solution", o.solution, "Index into the solution list")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Oracle versus criterion for 4..n");
  add_n(verify, false);
  auto* strata = app.add_subcommand("strata", "Branch-locus strata and fixed-locus data");
  add_n(strata, false);
  auto* symmetries = app.add_subcommand("symmetries", "Symmetry classes of Omega_n");
  add_n(symmetries, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*branch) {
      return cmd_branch(o, out);
    }
    if (*real) {
      return cmd_real(o, out);
    }
    if (*census) {
      return cmd_census(o, out);
    }
    if (*w_fixed) {
      return cmd_witness_fixed(o, out);
    }
    if (*w_real) {
      return cmd_witness_real(o, out);
    }
    if (*w_klein) {
      return cmd_witness_klein(o, out);
    }
    if (*w_dihedral) {
      return cmd_witness_dihedral(o, out);
    }
    if (*verify) {
      return cmd_verify(o, out);
    }
    if (*strata) {
      return cmd_strata(o, out);
    }
    if (*symmetries) {
      return cmd_symmetries(o, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "cross-check failed: " << e.what() << "\n";
    return kExitCrossCheck;
  }
  return kExitUsage;
}

} // namespace moduli::cli
