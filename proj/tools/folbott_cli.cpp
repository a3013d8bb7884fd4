// folbott: command-line front end.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include "folbott/bottsum.hpp"
#include "folbott/extforms.hpp"
#include "folbott/fixlocus.hpp"
#include "folbott/relations.hpp"
#include "folbott/resolve.hpp"
#include "folbott/torus.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>

using namespace folbott;
using json = nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string weights_text = "0,1,5,25";
  WeightVector weights = kDefaultWeights;
  std::string output = "text";
  unsigned jobs = 1;
  bool json() const { return output == "json"; }
};

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

std::string status_word(bool ok) {
  if (!use_color()) return ok ? "ok" : "FAIL";
  return ok ? "\033[32mok\033[0m" : "\033[31mFAIL\033[0m";
}

WeightVector checked_weights(const std::string& text) {
  WeightVector w;
  try {
    w = parse_weights(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--weights: ") + e.what());
  }
  WeightValidation v = check_weights(w);
  if (!v.ok) {
    std::string msg = "--weights " + text + " is not valid; colliding sums:";
    for (const auto& c : v.collisions) msg += "\n  " + c;
    throw UsageError(msg);
  }
  return w;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json per_flag_json(const WeightVector& w, int power) {
  json arr = json::array();
  for (const auto& f : enumerate_fixed_flags(w)) {
    LinearForm s = raw_flag_sum(f, w, power);
    arr.push_back({{"flag", f.str()}, {"sum", s.to_json()}, {"text", s.str()}});
  }
  return arr;
}

int run_degree(const RunConfig& cfg, int default_power, std::optional<int> power_opt, bool symbolic, bool per_flag) {
  int power = power_opt.value_or(default_power);
  if (power != 7 && power != 13) throw UsageError("--power must be 7 or 13");
  const WeightVector& w = cfg.weights;
  if (per_flag) {
    // Always JSON: the sums are meant for machine comparison.
    print_json({{"weights", w}, {"power", power}, {"flags", per_flag_json(w, power)}});
    return 0;
  }
  LinearForm form = total_degree_form(w, power, cfg.jobs);
  if (symbolic) {
    if (cfg.json()) {
      print_json({{"weights", w}, {"power", power}, {"degree_form", form.to_json()}});
    } else {
      std::cout << form.str() << "\n";
    }
    return 0;
  }
  RelationSet rels = solve_relations(build_system(w, cfg.jobs).equations);
  Rational value;
  try {
    value = substitute_relations(form, rels);
  } catch (const ResidualUnknowns& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  if (cfg.json()) {
    print_json({{"weights", w}, {"power", power}, {"degree", rational_to_json(value)}});
  } else {
    std::cout << to_string(value) << "\n";
  }
  return 0;
}

int run_relations(const RunConfig& cfg) {
  RelationSet rels = solve_relations(build_system(cfg.weights, cfg.jobs).equations);
  if (cfg.json()) {
    json rows = json::array();
    for (const auto& r : rels.rows) {
      LinearForm p = primitive(r);
      rows.push_back({{"text", relation_str(r)}, {"pivot", "d" + std::to_string(rels.pivots[rows.size()])},
                      {"row", p.to_json()}});
    }
    print_json({{"weights", cfg.weights}, {"rank", rels.rank()}, {"relations", rows}});
  } else {
    std::cout << "rank " << rels.rank() << "\n";
    for (const auto& r : rels.rows) std::cout << "  " << relation_str(r) << "\n";
  }
  return 0;
}

Flag parse_flag(const std::string& text) {
  Flag f;
  std::string digits;
  for (char c : text)
    if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
  if (digits.size() != 4) throw UsageError("--flag expects four indices such as 0;1;2;3");
  for (int i = 0; i < 4; ++i) f.perm[i] = digits[i] - '0';
  std::array<int, 4> s = f.perm;
  std::sort(s.begin(), s.end());
  if (s != std::array<int, 4>{0, 1, 2, 3}) throw UsageError("--flag is not a permutation of 0,1,2,3: " + text);
  return f;
}

int run_tables(const RunConfig& cfg, const std::string& flag_text) {
  Flag flag = flag_text.empty() ? Flag{} : parse_flag(flag_text);
  Catalog cat = build_catalog(flag);
  if (cfg.json()) {
    json pts = json::array(), lines = json::array();
    for (const auto& p : cat.points) pts.push_back(to_json(p));
    for (const auto& l : cat.lines) lines.push_back(to_json(l));
    print_json({{"flag", flag.str()}, {"points", pts}, {"lines", lines}});
    return 0;
  }
  std::cout << "flag " << flag.str() << ": " << cat.points.size() << " points, " << cat.lines.size() << " lines\n";
  int table = -1;
  for (const auto& p : cat.points) {
    if (p.table != table) {
      table = p.table;
      std::cout << "\nTable " << table << "\n";
    }
    std::cout << "  " << p.id << "  [" << p.stage << "]  W=" << p.wfiber.str() << "\n    T: ";
    for (std::size_t i = 0; i < p.tangent.size(); ++i) std::cout << (i ? ", " : "") << p.tangent[i].str();
    std::cout << "\n    omega: " << (p.omega_generator ? p.omega_generator->str() : "undef")
              << (p.suspected_typo ? "   (reference cell, suspected typo)" : "") << "\n";
  }
  std::cout << "\nLines\n";
  for (const auto& l : cat.lines) {
    std::cout << "  " << l.id << " (table " << l.table << ")  W=" << l.wfiber.str() << "  slots d"
              << l.degree_slots.front() << "..d" << l.degree_slots.back() << "\n    N: ";
    for (std::size_t i = 0; i < l.normal_base.size(); ++i) std::cout << (i ? ", " : "") << l.normal_base[i].str();
    std::cout << "\n";
  }
  return 0;
}

int run_resolve(const RunConfig& cfg, const std::string& chart_id, const std::string& stage, bool check_tables) {
  if (check_tables) {
    auto entries = cross_check_tables();
    int bad = 0;
    json arr = json::array();
    for (const auto& e : entries) {
      if (e.status == CheckStatus::Mismatch) ++bad;
      arr.push_back({{"id", e.id}, {"status", to_string(e.status)}, {"expected", e.expected}, {"computed", e.computed}});
    }
    if (cfg.json()) {
      print_json({{"cells", arr}, {"mismatches", bad}});
    } else {
      for (const auto& e : entries) {
        std::cout << e.id << "  " << to_string(e.status) << "\n";
        if (e.status != CheckStatus::Match && e.status != CheckStatus::ZeroAsExpected)
          std::cout << "    reference: " << e.expected << "\n    computed: " << e.computed << "\n";
      }
      std::cout << entries.size() << " cells, " << bad << " mismatches\n";
    }
    return bad ? kExitMismatch : 0;
  }
  if (chart_id.empty()) throw UsageError("resolve needs --chart <id> or --check-tables");
  const ChartPipeline* chart = nullptr;
  try {
    chart = &chart_pipeline(chart_id);
  } catch (const std::invalid_argument& e) {
    std::string msg = std::string(e.what()) + "; known charts:";
    for (const auto& c : chart_pipelines()) msg += " " + c.id;
    throw UsageError(msg);
  }
  auto ledger = divisibility_ledger();
  std::vector<LedgerEntry> mine;
  for (const auto& e : ledger)
    if (e.chart == chart->id) mine.push_back(e);

  // --stage: an index into this chart's ledger (0 = before any blowup) or a path "C.s5>E'.t1".
  std::vector<std::string> path;
  if (!stage.empty()) {
    bool numeric = std::all_of(stage.begin(), stage.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    std::string p = stage;
    if (numeric) {
      std::size_t n = std::stoul(stage);
      if (n >= mine.size()) throw UsageError("--stage out of range (0.." + std::to_string(mine.size() - 1) + ")");
      p = n == 0 ? "" : mine[n].stage;
    }
    std::string cur;
    for (std::size_t i = 0; i <= p.size(); ++i) {
      if (i == p.size() || p[i] == '>') {
        auto b = cur.find_first_not_of(' ');
        auto e = cur.find_last_not_of(' ');
        if (b != std::string::npos) path.push_back(cur.substr(b, e - b + 1));
        cur.clear();
      } else {
        cur += p[i];
      }
    }
  }
  OneForm w;
  std::string exc = "x0";
  try {
    if (path.empty()) {
      w = initial_omega(*chart);
    } else {
      auto stages = run_pipeline(*chart, path);
      w = stages.back().omega;
      exc = stages.back().exc.str();
    }
  } catch (const StageFailure& f) {
    std::cerr << "NotDivisible: " << f.what() << "\n";
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all_ok = true;
  for (const auto& e : mine) all_ok = all_ok && e.divisible;
  if (cfg.json()) {
    json led = json::array();
    for (const auto& e : mine)
      led.push_back({{"stage", e.stage}, {"exc", e.exc}, {"divisible", e.divisible}, {"projective", e.projective}});
    print_json({{"chart", chart->id}, {"stage", path}, {"divided_by", exc}, {"omega", to_json(w)}, {"ledger", led}});
  } else {
    std::cout << "chart " << chart->id << ", stage " << (path.empty() ? "(chart)" : stage) << ", divided by " << exc
              << "\nomega = " << w.str() << "\n\nledger\n";
    for (std::size_t i = 0; i < mine.size(); ++i)
      std::cout << "  [" << i << "] " << mine[i].stage << "  / " << mine[i].exc << "  "
                << status_word(mine[i].divisible) << "\n";
  }
  return all_ok ? 0 : kExitMismatch;
}

int run_three_planes(const RunConfig& cfg) {
  ThreePlanesResult r = three_planes_demo();
  if (cfg.json()) {
    json arr = json::array();
    for (const auto& c : r.contributions) arr.push_back({{"name", c.name}, {"value", rational_to_json(c.value)}});
    print_json({{"contributions", arr}, {"total", rational_to_json(r.total)}});
  } else {
    for (const auto& c : r.contributions) std::cout << c.name << "  " << to_string(c.value) << "\n";
    std::cout << "total  " << to_string(r.total) << "\n";
  }
  return r.total == 1 ? 0 : kExitMismatch;
}

int run_singular_locus(const RunConfig& cfg) {
  OneForm w = omega0();
  bool projective = euler_contraction(w).is_zero();
  bool integrable = true;
  for (const auto& c : wedge_d(w)) integrable = integrable && c.is_zero();
  auto coeffs = singular_locus_coeffs(w);
  std::vector<Polynomial> polys(coeffs.begin(), coeffs.end());
  bool ok = projective && integrable;
  json curves = json::array();
  for (const auto& c : omega0_test_curves()) {
    bool on_ideal = vanishes_on_parametrization(c.ideal, c.param);
    bool singular = vanishes_on_parametrization(polys, c.param);
    ok = ok && on_ideal && singular == c.in_singular_locus;
    curves.push_back({{"curve", c.name}, {"parametrization_ok", on_ideal}, {"in_singular_locus", singular},
                      {"expected", c.in_singular_locus}});
  }
  if (cfg.json()) {
    json A = json::array();
    for (const auto& c : coeffs) A.push_back(c.str());
    print_json({{"omega", w.str()}, {"coefficients", A}, {"projective", projective}, {"integrable", integrable},
                {"curves", curves}});
  } else {
    std::cout << "omega0 = " << w.str() << "\n";
    for (int i = 0; i < 4; ++i) std::cout << "  A" << i << " = " << coeffs[i].str() << "\n";
    std::cout << "sum A_i x_i = 0: " << status_word(projective) << "\nomega ^ d omega = 0: " << status_word(integrable)
              << "\n";
    for (const auto& c : curves)
      std::cout << c["curve"].get<std::string>() << ": " << (c["in_singular_locus"].get<bool>() ? "in" : "not in")
                << " Sing  " << status_word(c["in_singular_locus"] == c["expected"] && c["parametrization_ok"].get<bool>())
                << "\n";
  }
  return ok ? 0 : kExitMismatch;
}

int run_normal_twist(const RunConfig& cfg, int N, int m) {
  NormalTwistResult r;
  try {
    r = normal_twist_check(N, m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.json()) {
    json eqs = json::array(), shift = json::array();
    for (const auto& e : r.equations) eqs.push_back({{"v", e.v}, {"text", e.str()}});
    for (const auto& s : r.shift) shift.push_back(rational_to_json(s));
    print_json({{"N", N}, {"m", m}, {"equations", eqs}, {"unique", r.unique}, {"b_minus_a", shift},
                {"matches_expected", r.matches_expected}});
  } else {
    for (const auto& e : r.equations) std::cout << "v=" << e.v << ": " << e.str() << "\n";
    if (r.unique) {
      for (std::size_t i = 0; i < r.shift.size(); ++i) {
        std::cout << "b" << i + 1 << " = a" << i + 1;
        if (r.shift[i] != 0) std::cout << (r.shift[i] < 0 ? " - " : " + ") << to_string(abs(r.shift[i]));
        std::cout << "\n";
      }
    } else {
      std::cout << "system is not uniquely solvable\n";
    }
    std::cout << "expected pattern: " << status_word(r.matches_expected) << "\n";
  }
  return r.matches_expected ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bott-residue engine for the exceptional component of degree-two foliations on P3"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--weights", cfg.weights_text, "Torus weights w0,w1,w2,w3")->capture_default_str();
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads for the flag sum")->check(CLI::Range(1u, 256u))->capture_default_str();

  std::optional<int> power;
  bool symbolic = false, per_flag = false;
  auto* fiber = app.add_subcommand("fiber-degree", "Degree of the fiber over one flag (power 7)");
  auto* comp = app.add_subcommand("component-degree", "Degree of the component (power 13)");
  for (auto* sc : {fiber, comp}) {
    sc->add_option("--power", power, "Override the power (7 or 13)");
    sc->add_flag("--symbolic-d", symbolic, "Print the linear form in d1..d30 before the relations");
    sc->add_flag("--per-flag", per_flag, "Emit the 24 per-flag partial sums as JSON");
  }
  auto* rel = app.add_subcommand("relations", "Linear relations among d1..d30");
  std::string flag_text;
  auto* tables = app.add_subcommand("tables", "Dump the fixed-point catalog");
  tables->add_option("--flag", flag_text, "Flag as i;j;k;m (default 0;1;2;3)");
  std::string chart_id, stage;
  bool check_tables = false;
  auto* res = app.add_subcommand("resolve", "Replay the chart blowup pipelines");
  res->add_option("--chart", chart_id, "Chart id, e.g. b3=a6=1");
  res->add_option("--stage", stage, "Ledger index (0 = before blowups) or a path like \"C.s5>E'.t1\"");
  res->add_flag("--check-tables", check_tables, "Cross-check every table cell");
  auto* three = app.add_subcommand("three-planes", "Three generic planes on a blowup of P3");
  auto* sing = app.add_subcommand("singular-locus", "Verify omega0 and its singular curves");
  int N = 4, m = 1;
  auto* twist = app.add_subcommand("normal-twist-check", "Normal-bundle twists of a line under a linear blowup");
  twist->add_option("--N", N, "Ambient dimension")->capture_default_str();
  twist->add_option("--m", m, "Dimension of the blown-up subspace")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.weights = checked_weights(cfg.weights_text);
    if (*fiber) return run_degree(cfg, 7, power, symbolic, per_flag);
    if (*comp) return run_degree(cfg, 13, power, symbolic, per_flag);
    if (*rel) return run_relations(cfg);
    if (*tables) return run_tables(cfg, flag_text);
    if (*res) return run_resolve(cfg, chart_id, stage, check_tables);
    if (*three) return run_three_planes(cfg);
    if (*sing) return run_singular_locus(cfg);
    if (*twist) return run_normal_twist(cfg, N, m);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InconsistentSystem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
