#include "folbott/resolve.hpp"

#include "embedded_data.hpp"

#include <algorithm>
#include <set>

namespace folbott {

namespace {

using json = nlohmann::json;

std::string replace_exc(const std::string& expr, const std::string& exc) {
  std::string out;
  for (char c : expr) {
    if (c == 'E') {
      out += "(" + exc + ")";
    } else {
      out += c;
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> read_pairs(const json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : j) out.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  return out;
}

Bindings to_bindings(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Bindings b;
  for (const auto& [v, e] : pairs) b[var_id(v)] = parse_polynomial(e);
  return b;
}

ChartPipeline load_chart(std::string_view text) {
  json j = json::parse(text);
  ChartPipeline c;
  c.id = j.at("id").get<std::string>();
  c.base_subs = read_pairs(j.at("base_subs"));
  c.post_subs = read_pairs(j.at("post_subs"));
  for (const auto& fj : j.at("families")) {
    BlowupFamily f;
    f.name = fj.at("name").get<std::string>();
    f.parent = fj.at("parent").get<std::vector<std::string>>();
    f.coord = fj.at("coord").get<std::string>().at(0);
    f.equations = fj.at("equations").get<std::vector<std::string>>();
    for (const auto& s : fj.at("subs")) {
      if (s.is_null()) {
        f.subs.emplace_back(std::nullopt);
      } else {
        f.subs.emplace_back(std::make_pair(s.at(0).get<std::string>(), s.at(1).get<std::string>()));
      }
    }
    if (f.subs.size() != f.equations.size()) throw std::logic_error("family " + f.name + ": subs/equations size");
    if (fj.contains("charts")) {
      f.charts = fj.at("charts").get<std::vector<int>>();
    } else {
      for (int i = 0; i < static_cast<int>(f.equations.size()); ++i) f.charts.push_back(i);
    }
    c.families.push_back(std::move(f));
  }
  for (const auto& cj : j.at("certificates")) {
    Certificate cert;
    cert.name = cj.at("name").get<std::string>();
    for (const auto& step : cj.at("subs")) cert.subs.push_back(read_pairs(step));
    cert.coords = cj.at("coords").get<std::vector<std::string>>();
    c.certificates.push_back(std::move(cert));
  }
  return c;
}

struct Step {
  std::string family;
  int chart;
};

Step parse_step(const std::string& s) {
  auto dot = s.rfind('.');
  if (dot == std::string::npos || dot + 2 > s.size()) throw std::invalid_argument("bad stage '" + s + "'");
  return {s.substr(0, dot), std::stoi(s.substr(dot + 2))};
}

std::string join_path(const std::vector<std::string>& path) {
  std::string s;
  for (const auto& p : path) s += (s.empty() ? "" : " > ") + p;
  return s.empty() ? "(chart)" : s;
}

}  // namespace

const BlowupFamily& ChartPipeline::family(const std::string& name) const {
  for (const auto& f : families)
    if (f.name == name) return f;
  throw std::invalid_argument("chart " + id + " has no blowup family '" + name + "'");
}

const std::vector<ChartPipeline>& chart_pipelines() {
  static const std::vector<ChartPipeline> charts = [] {
    std::vector<ChartPipeline> out;
    for (auto name : {"charts/b3a6.json", "charts/u1.json", "charts/u2.json", "charts/u3.json", "charts/b2.json"})
      out.push_back(load_chart(detail::embedded(name)));
    return out;
  }();
  return charts;
}

const ChartPipeline& chart_pipeline(const std::string& id) {
  for (const auto& c : chart_pipelines())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown chart '" + id + "'");
}

Polynomial general_cubic() {
  return parse_polynomial("a0x0^3 + a1x0^2x1 + a2x0^2x2 + a3x0^2x3 + a4x0x1^2 + a5x0x1x2 + a6x1^3");
}

Polynomial general_quadric() { return parse_polynomial("b0x0^2 + b1x0x1 + b2x0x2 + b3x1^2"); }

OneForm initial_omega(const ChartPipeline& chart) {
  Bindings base = to_bindings(chart.base_subs);
  Polynomial f = substitute(general_cubic(), base);
  Polynomial g = substitute(general_quadric(), base);
  OneForm w;
  try {
    w = build_omega(f, g, Polynomial::variable(var::x0));
  } catch (const NotDivisible& e) {
    throw StageFailure(chart.id, "x0", e.what());
  }
  return substitute(w, to_bindings(chart.post_subs));
}

std::vector<StageResult> run_pipeline(const ChartPipeline& chart, const std::vector<std::string>& path) {
  std::vector<StageResult> out;
  OneForm w = initial_omega(chart);
  std::vector<std::string> done;
  for (const auto& label : path) {
    Step st = parse_step(label);
    const BlowupFamily& fam = chart.family(st.family);
    if (fam.parent != done)
      throw std::invalid_argument(label + " applies after [" + join_path(fam.parent) + "], not [" + join_path(done) + "]");
    if (std::find(fam.charts.begin(), fam.charts.end(), st.chart) == fam.charts.end())
      throw std::invalid_argument("chart " + label + " is not available");
    const std::string& exc_text = fam.equations.at(static_cast<std::size_t>(st.chart));
    Polynomial exc = parse_polynomial(exc_text);
    Bindings b;
    for (std::size_t j = 0; j < fam.subs.size(); ++j) {
      if (static_cast<int>(j) == st.chart || !fam.subs[j]) continue;
      b[var_id(fam.subs[j]->first)] = parse_polynomial(replace_exc(fam.subs[j]->second, exc_text));
    }
    for (VarId v : exc.variables())
      if (b.count(v)) throw std::logic_error(label + ": exceptional equation uses a substituted variable");
    OneForm sub = substitute(w, b);
    done.push_back(label);
    try {
      w = exact_divide(sub, exc);
    } catch (const NotDivisible& e) {
      throw StageFailure(chart.id, join_path(done), e.what());
    }
    out.push_back({label, exc, w});
  }
  return out;
}

OneForm evaluate_fixed(const OneForm& w, const PointValues& point, const std::vector<VarId>& free) {
  Bindings b;
  for (int i = 0; i < 4; ++i)
    for (VarId v : w.A[i].variables()) {
      if (is_x_var(v) || std::find(free.begin(), free.end(), v) != free.end()) continue;
      auto it = point.find(v);
      b[v] = Polynomial(it == point.end() ? Rational(0) : it->second);
    }
  return substitute(w, b);
}

std::vector<LedgerEntry> divisibility_ledger() {
  std::vector<LedgerEntry> out;
  for (const auto& chart : chart_pipelines()) {
    {
      LedgerEntry e{chart.id, "(chart)", "x0", false, false, ""};
      try {
        OneForm w = initial_omega(chart);
        e.divisible = true;
        e.projective = euler_contraction(w).is_zero();
      } catch (const StageFailure& f) {
        e.message = f.what();
      }
      out.push_back(e);
    }
    for (const auto& fam : chart.families) {
      for (int i : fam.charts) {
        std::vector<std::string> path = fam.parent;
        path.push_back(fam.name + "." + fam.coord + std::to_string(i));
        LedgerEntry e{chart.id, join_path(path), fam.equations[static_cast<std::size_t>(i)], false, false, ""};
        try {
          auto stages = run_pipeline(chart, path);
          e.divisible = true;
          e.projective = euler_contraction(stages.back().omega).is_zero();
        } catch (const StageFailure& f) {
          e.message = f.what();
        }
        out.push_back(e);
      }
    }
  }
  return out;
}

CertificateResult no_indeterminacy_certificate(const ChartPipeline& chart, const Certificate& cert) {
  CertificateResult res{chart.id, cert.name, false, {}};
  Polynomial f = general_cubic();
  Polynomial g = general_quadric();
  for (const auto& step : cert.subs) {
    Bindings b = to_bindings(step);
    f = substitute(f, b);
    g = substitute(g, b);
  }
  OneForm w = build_omega(f, g, Polynomial::variable(var::x0));
  std::vector<Polynomial> coeffs;
  std::vector<VarId> xs{var::x0, var::x1, var::x2, var::x3};
  for (const auto& a : w.A)
    for (auto& [m, c] : coefficients_in(a, xs)) coeffs.push_back(c);

  std::set<VarId> remaining;
  for (const auto& c : cert.coords) remaining.insert(var_id(c));
  Bindings forced;
  // a_i is forced to 0 once the coefficients divisible by a_i have quotients
  // generating the unit ideal. Sufficient test: one quotient reduces to a
  // nonzero constant modulo the others. Repeat with forced zeros substituted.
  auto forces = [&](VarId v) {
    Polynomial pv = Polynomial::variable(v);
    std::vector<Polynomial> q;
    for (const auto& c : coeffs) {
      Polynomial r = substitute(c, forced);
      if (r.is_zero()) continue;
      try {
        q.push_back(exact_divide(r, pv));
      } catch (const NotDivisible&) {
      }
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
      Polynomial r = q[i];
      for (std::size_t j = 0; j < q.size() && !r.is_constant(); ++j)
        if (j != i) r = divide(r, q[j]).remainder;
      if (r.is_constant() && !r.is_zero()) return true;
    }
    return false;
  };
  bool progress = true;
  while (progress && !remaining.empty()) {
    progress = false;
    for (VarId v : std::vector<VarId>(remaining.begin(), remaining.end())) {
      if (!forces(v)) continue;
      remaining.erase(v);
      forced[v] = Polynomial(0);
      res.forced_order.push_back(var_name(v));
      progress = true;
    }
  }
  res.ok = remaining.empty();
  return res;
}

// ---- table fixtures ----

std::string Table1Row::id() const {
  std::string s = "T1(" + g.str();
  if (dir) s += "," + dir->str();
  return s + "," + f.str() + ")";
}

std::string TableRow::id() const { return "T" + std::to_string(table) + "." + row; }

namespace {

std::optional<OneForm> read_generator(const std::string& text) {
  if (text == "undef") return std::nullopt;
  return parse_oneform(text);
}

RowKind read_kind(const std::string& k) {
  if (k == "point") return RowKind::Point;
  if (k == "undefined") return RowKind::Undefined;
  if (k == "family") return RowKind::Family;
  if (k == "on-line") return RowKind::OnLine;
  throw std::invalid_argument("unknown row kind " + k);
}

PointValues read_point(const json& j) {
  PointValues p;
  for (const auto& [k, v] : j.items()) p[var_id(k)] = parse_rational(v.get<std::string>());
  return p;
}

struct Fixtures {
  std::vector<Table1Row> t1;
  std::vector<TableRow> rows;
};

const Fixtures& fixtures() {
  static const Fixtures fx = [] {
    Fixtures out;
    json j = json::parse(detail::embedded("tables.json"));
    for (const auto& r : j.at("table1")) {
      Table1Row t;
      t.g = parse_polynomial(r.at("g").get<std::string>());
      if (r.contains("dir")) t.dir = parse_polynomial(r.at("dir").get<std::string>());
      t.f = parse_polynomial(r.at("f").get<std::string>());
      t.generator_text = r.at("generator").get<std::string>();
      t.generator = read_generator(t.generator_text);
      out.t1.push_back(std::move(t));
    }
    for (const auto& tj : j.at("tables")) {
      auto prefix = tj.at("prefix").get<std::vector<std::string>>();
      std::string fam = tj.at("family").get<std::string>();
      PointValues common = read_point(tj.at("point"));
      for (const auto& r : tj.at("rows")) {
        TableRow t;
        t.table = tj.at("table").get<int>();
        t.chart = tj.at("chart").get<std::string>();
        t.row = r.at("row").get<std::string>();
        t.eigenvector = r.at("eigenvector").get<std::string>();
        t.kind = read_kind(r.at("kind").get<std::string>());
        t.path = prefix;
        t.path.push_back(fam + "." + t.row);
        t.point = common;
        if (r.contains("point"))
          for (const auto& [v, q] : read_point(r.at("point"))) t.point[v] = q;
        if (r.contains("free"))
          for (const auto& v : r.at("free")) t.free.push_back(var_id(v.get<std::string>()));
        t.generator_text = r.at("generator").get<std::string>();
        t.generator = read_generator(t.generator_text);
        t.suspected_typo = r.value("suspected_typo", false);
        out.rows.push_back(std::move(t));
      }
    }
    return out;
  }();
  return fx;
}

}  // namespace

const std::vector<Table1Row>& table1_rows() { return fixtures().t1; }
const std::vector<TableRow>& table_rows() { return fixtures().rows; }

const TableRow& table_row(int table, const std::string& row) {
  for (const auto& r : table_rows())
    if (r.table == table && r.row == row) return r;
  throw std::invalid_argument("no row T" + std::to_string(table) + "." + row);
}

OneForm compute_table1(const Table1Row& r) {
  // Over g = x0^2 the direction only selects the cubic family; omega uses g itself.
  return build_omega(r.f, r.g, Polynomial::variable(var::x0));
}

OneForm compute_row(const TableRow& r) {
  auto stages = run_pipeline(chart_pipeline(r.chart), r.path);
  return evaluate_fixed(stages.back().omega, r.point, r.free);
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Match:
      return "match";
    case CheckStatus::ZeroAsExpected:
      return "zero-as-expected";
    case CheckStatus::DocumentedMismatch:
      return "documented-mismatch";
    case CheckStatus::Mismatch:
      return "MISMATCH";
  }
  return "?";
}

CheckStatus compare_cell(const std::optional<OneForm>& expected, const OneForm& computed, bool suspected_typo) {
  CheckStatus ok;
  if (!expected) {
    ok = computed.is_zero() ? CheckStatus::ZeroAsExpected : CheckStatus::Mismatch;
  } else {
    ok = proportionality(*expected, computed) ? CheckStatus::Match : CheckStatus::Mismatch;
  }
  if (suspected_typo && ok == CheckStatus::Mismatch) return CheckStatus::DocumentedMismatch;
  return ok;
}

std::vector<CrossCheckEntry> cross_check_tables() {
  std::vector<CrossCheckEntry> out;
  for (const auto& r : table1_rows()) {
    OneForm w = compute_table1(r);
    out.push_back({r.id(), r.generator_text, w.str(), compare_cell(r.generator, w, false)});
  }
  for (const auto& r : table_rows()) {
    CrossCheckEntry e{r.id(), r.generator_text, "", CheckStatus::Mismatch};
    try {
      OneForm w = compute_row(r);
      e.computed = w.str();
      e.status = compare_cell(r.generator, w, r.suspected_typo);
    } catch (const StageFailure& f) {
      e.computed = std::string("stage failure: ") + f.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace folbott
