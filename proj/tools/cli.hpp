#pragma once

// Subcommands of the movcone tool. `run` is the whole program minus main(),
// so tests can drive it with in-memory streams.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "movcone/movcone.hpp"
#include "report.hpp"

namespace movcone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kMMaxEnv = "CONE_WALLS_M_MAX";

/// Bad flags or values that the library would never see.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t half_degree(std::int64_t h2) {
  if (h2 < 2 || h2 % 2 != 0) {
    throw UsageError("--h2 takes H.H, which must be even and >= 2 (got " + std::to_string(h2) + ")");
  }
  return h2 / 2;
}

/// --m-max, then CONE_WALLS_M_MAX, then the library default.
inline std::optional<EnumerationCaps> resolve_m_max(std::optional<std::int64_t> flag) {
  if (flag) {
    if (*flag < 1) throw UsageError("--m-max must be >= 1");
    return EnumerationCaps{*flag, false};
  }
  if (const char* env = std::getenv(kMMaxEnv)) {
    std::int64_t value = 0;
    std::istringstream in(env);
    if (!(in >> value) || !in.eof() || value < 1) {
      throw UsageError(std::string(kMMaxEnv) + " must be a positive integer, got '" + env + "'");
    }
    return EnumerationCaps{value, false};
  }
  return std::nullopt;
}

inline std::string witness_text(const BoundaryWitness& witness) {
  if (const auto* pell = std::get_if<PellSolution>(&witness)) {
    return "(" + pell->x().get_str() + "," + pell->y().get_str() + ")";
  }
  const auto& ratio = std::get<SquareRatioWitness>(witness);
  return ratio.k.get_str() + "/" + ratio.h.get_str();
}

}  // namespace detail

struct MovableArgs {
  std::int64_t n = 3;
  std::int64_t h2 = 2;
};

inline Report cmd_movable(const MovableArgs& args) {
  Report report{"movable", {{"n", args.n}, {"h2", args.h2}}, {}, std::nullopt};
  const std::int64_t d = detail::half_degree(args.h2);
  MovableCone cone = movable_boundary(args.n, d);
  report.summary = {{"n", args.n},
                    {"h2", args.h2},
                    {"d", d},
                    {"mu", cone.mu},
                    {"case", case_number(cone.case_tag)},
                    {"case_tag", to_string(cone.case_tag)},
                    {"witness", detail::witness_text(cone.witness)}};
  return report;
}

struct WallsArgs {
  std::int64_t n = 3;
  std::int64_t h2 = 2;
  std::optional<std::int64_t> m_max;
};

inline Report cmd_walls(const WallsArgs& args) {
  Report report{"walls", {{"n", args.n}, {"h2", args.h2}, {"m_max", args.m_max}}, {}, std::nullopt};
  const std::int64_t d = detail::half_degree(args.h2);
  WallSet set = enumerate_walls(args.n, d, detail::resolve_m_max(args.m_max));
  const Integer dd = d;
  const MukaiVector v = hilbert_classes(args.n).v;

  Table table{"walls", {"kind", "slope", "witness", "square", "dot_v"}, {}};
  for (const Wall& wall : set.walls) {
    table.rows.push_back({"wall", wall.slope, wall.witness.str(), self_pairing(wall.witness, dd),
                          mukai_pairing(wall.witness, v, dd)});
  }
  if (set.boundary_witnesses.empty()) {
    table.rows.push_back({"boundary", set.cone.mu, std::monostate{}, std::monostate{}, std::monostate{}});
  } else {
    const MukaiVector& w = set.boundary_witnesses.front();
    table.rows.push_back(
        {"boundary", set.cone.mu, w.str(), self_pairing(w, dd), mukai_pairing(w, v, dd)});
  }
  report.summary = {{"n", args.n},
                    {"h2", args.h2},
                    {"mu", set.cone.mu},
                    {"case_tag", to_string(set.cone.case_tag)},
                    {"wall_count", static_cast<std::int64_t>(set.walls.size())},
                    {"m_max", set.caps.m_max},
                    {"m_max_clamped", set.caps.clamped},
                    {"cap_warning", set.cap_warning}};
  report.table = std::move(table);
  return report;
}

struct Table1Args {
  std::vector<std::int64_t> degrees;
  std::optional<std::int64_t> m_max;
};

inline Report cmd_table1(const Table1Args& args) {
  std::vector<std::int64_t> degrees = args.degrees.empty() ? table1_reference_degrees() : args.degrees;
  for (std::int64_t h2 : degrees) detail::half_degree(h2);
  std::string listed;
  for (std::int64_t h2 : degrees) listed += (listed.empty() ? "" : " ") + std::to_string(h2);
  Report report{"table1", {{"degrees", listed}, {"m_max", args.m_max}}, {}, std::nullopt};
  Table table{"rows", {"h2", "walls", "mu", "cap_warning"}, {}};
  for (Table1Row& row : table1(degrees, detail::resolve_m_max(args.m_max))) {
    table.rows.push_back({row.h2, std::move(row.walls), row.mu, row.cap_warning});
  }
  report.table = std::move(table);
  return report;
}

struct Table2Args {
  std::optional<std::int64_t> max_h2;
  bool paper_rows = false;
  bool include_squares = false;
};

inline Report cmd_table2(const Table2Args& args, unsigned precision) {
  if (args.paper_rows && args.max_h2) throw UsageError("--paper-rows and --max-h2 are exclusive");
  Report report{"table2",
                {{"max_h2", args.max_h2},
                 {"paper_rows", !args.max_h2.has_value()},
                 {"include_squares", args.include_squares}},
                {},
                std::nullopt};
  std::vector<std::int64_t> degrees;
  if (args.max_h2) {
    if (*args.max_h2 < 4) throw UsageError("--max-h2 must be >= 4");
    degrees = scan_degrees(*args.max_h2, args.include_squares);
  } else {
    degrees = table2_reference_degrees();
  }
  Table table{"rows", {"h2", "alpha", "bound", "knutsen", "sqrt_h2", "better"}, {}};
  for (Table2Row& row : table2(degrees)) {
    table.rows.push_back({row.h2, row.alpha, std::move(row.bound), row.knutsen,
                          sqrt_decimal(Integer(row.h2), precision), row.better});
  }
  report.table = std::move(table);
  return report;
}

struct ScanArgs {
  std::int64_t max_h2 = 10000;
  unsigned jobs = 1;
  bool include_squares = false;
};

inline Report cmd_scan(const ScanArgs& args) {
  if (args.max_h2 < 4) throw UsageError("--max-h2 must be >= 4");
  Report report{"scan",
                {{"max_h2", args.max_h2},
                 {"jobs", static_cast<std::int64_t>(args.jobs)},
                 {"include_squares", args.include_squares}},
                {},
                std::nullopt};
  const auto start = std::chrono::steady_clock::now();
  ScanResult result = scan_comparison(args.max_h2, args.include_squares, args.jobs);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::ostringstream seconds;
  seconds << std::fixed << std::setprecision(3) << elapsed.count();
  report.summary = {{"better", result.better},
                    {"total", result.total},
                    {"fraction", result.fraction()},
                    {"seconds", seconds.str()}};
  return report;
}

struct BoundsArgs {
  std::int64_t h2 = 2;
  std::int64_t a = 0;
  std::int64_t b = 1;
};

inline Report cmd_bounds(const BoundsArgs& args, unsigned precision) {
  Report report{"bounds", {{"h2", args.h2}, {"a", args.a}, {"b", args.b}}, {}, std::nullopt};
  if (args.h2 < 1) throw UsageError("--h2 must be positive");
  BoundResult closed_form = args.a == 0 && args.b == 1 && args.h2 % 2 == 0
                              ? bound_k3(args.h2)
                              : bound_general_type(args.h2, args.a, args.b);
  BoundResult best = best_bound(args.h2, args.a);
  std::optional<Rational> conjecture;
  if (!is_perfect_square(Integer(args.h2))) conjecture = szemberg_conjecture_bound(args.h2);
  report.summary = {{"h2", args.h2},
                    {"knutsen", knutsen_bound(args.h2)},
                    {"alpha", closed_form.n},
                    {"closed_form", closed_form.value},
                    {"best_n", best.n},
                    {"best", best.value},
                    {"szemberg_conjecture", conjecture},
                    {"sqrt_h2", sqrt_decimal(Integer(args.h2), precision)}};
  return report;
}

struct ObservationArgs {
  std::int64_t h2 = 2;
  std::optional<std::int64_t> m_max;
};

inline Report cmd_check_observation(const ObservationArgs& args) {
  Report report{"check-observation", {{"h2", args.h2}}, {}, std::nullopt};
  detail::half_degree(args.h2);
  ObservationResult result = check_observation(args.h2, detail::resolve_m_max(args.m_max));
  std::optional<std::string> witness;
  if (result.wall_witness) witness = result.wall_witness->str();
  std::optional<Rational> epsilon;
  if (result.epsilon.status != SeshadriStatus::Unknown) epsilon = result.epsilon.value;
  report.summary = {{"h2", args.h2},
                    {"verdict", to_string(result.verdict)},
                    {"epsilon", epsilon},
                    {"status", to_string(result.epsilon.status)},
                    {"source", result.epsilon.source},
                    {"t", result.t},
                    {"mu", result.mu},
                    {"wall_witness", witness}};
  return report;
}

struct PellArgs {
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> q;
  std::int64_t count = 1;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
};

inline Report cmd_pell(const PellArgs& args) {
  Report report{"pell",
                {{"d", args.d}, {"q", args.q}, {"count", args.count}, {"a", args.a}, {"b", args.b}},
                {},
                std::nullopt};
  Table table{"solutions", {"x", "y"}, {}};
  std::string equation;
  if (args.a || args.b) {
    if (!args.a || !args.b) throw UsageError("two-term mode needs both --a and --b");
    if (args.d || args.q) throw UsageError("--a/--b cannot be combined with --d/--q");
    equation = std::to_string(*args.a) + "x^2 - " + std::to_string(*args.b) + "y^2 = 1";
    if (auto sol = solve_two_term(*args.a, *args.b)) table.rows.push_back({sol->x(), sol->y()});
  } else {
    if (!args.d) throw UsageError("pell needs --d, or --a and --b");
    if (args.count < 1) throw UsageError("--count must be >= 1");
    equation = "x^2 - " + std::to_string(*args.d) + "y^2 = 1";
    if (args.q) {
      equation += ", " + std::to_string(*args.q) + " | x + 1";
      if (auto sol = first_with_divisibility(*args.d, *args.q)) {
        table.rows.push_back({sol->x(), sol->y()});
      }
    } else {
      for (const PellSolution& sol : pell_solutions(*args.d, static_cast<std::size_t>(args.count))) {
        table.rows.push_back({sol.x(), sol.y()});
      }
    }
  }
  report.summary = {{"equation", equation}, {"found", !table.rows.empty()}};
  report.table = std::move(table);
  return report;
}

struct NestedArgs {
  std::string surface = "p2";
  std::int64_t r = 2;
  std::int64_t e = 1;
  std::int64_t a = 1;
  std::int64_t b = 2;
  std::int64_t h2 = 2;
};

inline Report cmd_nested(const NestedArgs& args, unsigned precision) {
  Report report{"nested", {{"surface", args.surface}, {"r", args.r}}, {}, std::nullopt};
  NestedSurface surface;
  std::int64_t h2 = 1;
  if (args.surface == "p2") {
    surface = ProjectivePlane{};
  } else if (args.surface == "hirzebruch") {
    surface = Hirzebruch{args.e, args.a, args.b};
    // (aC + bF)^2 = -a^2 e + 2ab
    h2 = 2 * args.a * args.b - args.a * args.a * args.e;
    report.inputs.push_back({"e", args.e});
    report.inputs.push_back({"a", args.a});
    report.inputs.push_back({"b", args.b});
  } else if (args.surface == "k3") {
    surface = VeryGeneralK3{args.h2};
    h2 = args.h2;
    report.inputs.push_back({"h2", args.h2});
  } else {
    throw UsageError("--surface must be one of p2, hirzebruch, k3");
  }
  if (args.r < 1) throw UsageError("--r must be positive");
  Rational eps = eps_inf(surface, args.r);
  MdsResult mds = mds_obstructed(h2, args.r, args.surface == "p2");
  // sqrt(H^2 / r) = sqrt(H^2 r) / r, rendered as a decimal only.
  Rational nagata_approx = make_rational(0, 1);
  {
    const Integer scale = pow10(precision + 2);
    const Integer root = isqrt(Integer(h2) * args.r * scale * scale);
    nagata_approx = make_rational(root, scale * args.r);
  }
  report.summary = {{"surface", args.surface},
                    {"h2", h2},
                    {"r", args.r},
                    {"eps_inf", eps},
                    {"nagata_value", "sqrt(" + std::to_string(h2) + "/" + std::to_string(args.r) +
                                         ") ~ " + to_decimal(nagata_approx, precision)},
                    {"nagata_comparison", to_string(nagata_value_compare(h2, args.r, eps))},
                    {"mds", to_string(mds.verdict)},
                    {"mds_assumes_nagata", mds.assumes_nagata},
                    {"p2_perfect_square_not_mds", mds.p2_perfect_square}};
  return report;
}

inline OutputFormat parse_format(const std::string& name) {
  static const std::map<std::string, OutputFormat> formats{{"plain", OutputFormat::Plain},
                                                           {"csv", OutputFormat::Csv},
                                                           {"json", OutputFormat::Json},
                                                           {"markdown", OutputFormat::Markdown}};
  return formats.at(name);
}

/// Runs one invocation. Exit codes: 0 success, 2 domain error, 64 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Movable cones of Hilbert schemes of K3 surfaces and Seshadri constant bounds",
               "movcone"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  unsigned precision = 3;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json", "markdown"}));
  app.add_option("--precision", precision, "Digits after the decimal point")
      ->check(CLI::Range(0u, 50u));

  MovableArgs movable;
  auto* sub_movable = app.add_subcommand("movable", "Boundary of the movable cone of X^[n]");
  sub_movable->add_option("--n", movable.n, "Number of points")->check(CLI::Range(2, 1000000));
  sub_movable->add_option("--h2", movable.h2, "Degree H.H (even)")->required();

  WallsArgs walls;
  auto* sub_walls = app.add_subcommand("walls", "Flopping walls inside Mov(X^[n])");
  sub_walls->add_option("--n", walls.n, "Number of points")->check(CLI::Range(2, 1000000));
  sub_walls->add_option("--h2", walls.h2, "Degree H.H (even)")->required();
  sub_walls->add_option("--m-max", walls.m_max, "Enumeration cap on the H-coefficient");

  Table1Args t1;
  auto* sub_t1 = app.add_subcommand("table1", "Walls and movable cones of X^[3] by degree");
  sub_t1->add_option("--degrees", t1.degrees, "Degrees H.H to tabulate");
  sub_t1->add_option("--m-max", t1.m_max, "Enumeration cap on the H-coefficient");

  Table2Args t2;
  std::optional<std::int64_t> t2_max;
  auto* sub_t2 = app.add_subcommand("table2", "Seshadri lower bounds against floor(sqrt(H.H))");
  sub_t2->add_option("--max-h2", t2_max, "Tabulate even degrees 4..max");
  sub_t2->add_flag("--paper-rows", t2.paper_rows, "The thirteen reference degrees (default)");
  sub_t2->add_flag("--include-squares", t2.include_squares, "Keep even perfect squares");

  ScanArgs scan;
  auto* sub_scan = app.add_subcommand("scan", "Count degrees where the new bound beats Knutsen's");
  sub_scan->add_option("--max-h2", scan.max_h2, "Largest degree scanned")->required();
  sub_scan->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  sub_scan->add_flag("--include-squares", scan.include_squares, "Keep even perfect squares");

  BoundsArgs bounds;
  auto* sub_bounds = app.add_subcommand("bounds", "All Seshadri bounds for one degree");
  sub_bounds->add_option("--h2", bounds.h2, "Degree H.H")->required();
  sub_bounds->add_option("--a", bounds.a, "K_X = aH");
  sub_bounds->add_option("--b", bounds.b, "Minimal b with bH effective");

  ObservationArgs obs;
  auto* sub_obs = app.add_subcommand("check-observation",
                                     "Locate H^[3] - (eps/2) B relative to the walls of Mov");
  sub_obs->add_option("--h2", obs.h2, "Degree H.H (even)")->required();
  sub_obs->add_option("--m-max", obs.m_max, "Enumeration cap on the H-coefficient");

  PellArgs pell;
  auto* sub_pell = app.add_subcommand("pell", "Pell equation solutions");
  sub_pell->add_option("--d", pell.d, "D in x^2 - D y^2 = 1");
  sub_pell->add_option("--q", pell.q, "Require q | x + 1");
  sub_pell->add_option("--count", pell.count, "Number of solutions");
  sub_pell->add_option("--a", pell.a, "A in A x^2 - B y^2 = 1");
  sub_pell->add_option("--b", pell.b, "B in A x^2 - B y^2 = 1");

  NestedArgs nested;
  auto* sub_nested = app.add_subcommand("nested", "Infimum Seshadri constants from X^[r,r+1]");
  sub_nested->add_option("--surface", nested.surface, "p2, hirzebruch or k3")
      ->check(CLI::IsMember({"p2", "hirzebruch", "k3"}));
  sub_nested->add_option("--r", nested.r, "Number of points")->required();
  sub_nested->add_option("--e", nested.e, "Hirzebruch index");
  sub_nested->add_option("--a", nested.a, "H = aC + bF");
  sub_nested->add_option("--b", nested.b, "H = aC + bF");
  sub_nested->add_option("--h2", nested.h2, "K3 degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "movcone: " << e.what() << '\n';
    return kExitUsage;
  }

  RenderOptions options{parse_format(format_name), precision};
  std::string command = app.get_subcommands().front()->get_name();
  try {
    Report report;
    if (*sub_movable) {
      report = cmd_movable(movable);
    } else if (*sub_walls) {
      report = cmd_walls(walls);
    } else if (*sub_t1) {
      report = cmd_table1(t1);
    } else if (*sub_t2) {
      t2.max_h2 = t2_max;
      report = cmd_table2(t2, precision);
    } else if (*sub_scan) {
      report = cmd_scan(scan);
    } else if (*sub_bounds) {
      report = cmd_bounds(bounds, precision);
    } else if (*sub_obs) {
      report = cmd_check_observation(obs);
    } else if (*sub_pell) {
      report = cmd_pell(pell);
    } else {
      report = cmd_nested(nested, precision);
    }
    render(out, report, options);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "movcone " << command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // movcone::Error and anything else raised while computing.
    const bool domain = dynamic_cast<const Error*>(&e) != nullptr;
    if (options.format == OutputFormat::Json) {
      Json doc;
      doc["command"] = command;
      doc["inputs"] = Json::object();
      doc["error"] = e.what();
      out << render_json(doc);
    }
    err << "movcone " << command << ": " << e.what() << '\n';
    return domain ? kExitDomain : 1;
  }
}

}  // namespace movcone::cli
