#include "folbott/fixlocus.hpp"

#include "embedded_data.hpp"

#include <algorithm>
#include <map>

namespace folbott {

using json = nlohmann::json;

std::vector<EigenWeight> multiset_minus(std::vector<EigenWeight> whole, const std::vector<EigenWeight>& part) {
  for (const auto& p : part) {
    auto it = std::find(whole.begin(), whole.end(), p);
    if (it == whole.end()) throw std::invalid_argument("multiset_minus: " + p.str() + " not present");
    whole.erase(it);
  }
  return whole;
}

std::vector<EigenWeight> tangent_split_blowup(const std::vector<EigenWeight>& center,
                                              const std::vector<EigenWeight>& ambient,
                                              const EigenWeight& direction) {
  std::vector<EigenWeight> normal = multiset_minus(ambient, center);
  auto it = std::find(normal.begin(), normal.end(), direction);
  if (it == normal.end()) throw DirectionNotInNormal("direction " + direction.str() + " is not a normal weight");
  normal.erase(it);
  std::vector<EigenWeight> out = center;
  out.push_back(direction);
  for (const auto& n : normal) out.push_back(n - direction);
  return out;
}

std::optional<EigenWeight> generator_weight(const OneForm& w) {
  std::optional<EigenWeight> out;
  for (int i = 0; i < 4; ++i)
    for (const auto& [m, c] : w.A[i].terms()) {
      EigenWeight e;
      try {
        e = monomial_weight(m) + EigenWeight::of(i);
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
      if (out && *out != e) return std::nullopt;
      out = e;
    }
  return out;
}

OneForm permute_form(const OneForm& w, const Flag& flag) {
  Bindings b;
  for (int i = 0; i < 4; ++i) b[var::x0 + i] = Polynomial::variable(var::x0 + flag.perm[i]);
  OneForm r;
  for (int i = 0; i < 4; ++i) r.A[flag.perm[i]] = substitute(w.A[i], b);
  return r;
}

namespace {

EigenWeight weight_of(const Polynomial& mono) {
  if (mono.size() != 1) throw std::invalid_argument("expected a monomial: " + mono.str());
  return monomial_weight(mono.leading().first);
}

struct Anchor {
  std::vector<EigenWeight> tangent;
  EigenWeight nu;
};

Catalog build_standard() {
  json j = json::parse(detail::embedded("catalog.json"));
  std::vector<Polynomial> quadrics, cubics;
  for (const auto& q : j.at("quadrics")) quadrics.push_back(parse_polynomial(q.get<std::string>()));
  for (const auto& c : j.at("cubics")) cubics.push_back(parse_polynomial(c.get<std::string>()));
  std::map<std::string, Polynomial> extra;
  for (const auto& [k, v] : j.at("cubic_extra").items())
    extra.emplace(parse_polynomial(k).str(), parse_polynomial(v.get<std::string>()));

  auto cubic_list = [&](const Polynomial& g) {
    auto l = cubics;
    l.push_back(extra.at(g.str()));
    return l;
  };
  // Tangent of the projective fiber of cubics over g at f.
  auto cubic_tangent = [&](const Polynomial& g, const Polynomial& f) {
    std::vector<EigenWeight> t;
    for (const auto& c : cubic_list(g))
      if (c != f) t.push_back(weight_of(c) - weight_of(f));
    if (t.size() != 4) throw std::logic_error("cubic " + f.str() + " not in the family of " + g.str());
    return t;
  };
  const Polynomial& x0sq = quadrics.front();
  const EigenWeight x0w = EigenWeight::of(0);

  auto table1_anchor = [&](const Table1Row& r) {
    Anchor a;
    if (!r.dir) {
      a.tangent = cubic_tangent(r.g, r.f);
      for (const auto& q : quadrics)
        if (q != r.g) a.tangent.push_back(weight_of(q) - weight_of(r.g));
      a.nu = weight_of(r.g) + weight_of(r.f) - x0w;
    } else {
      a.tangent = cubic_tangent(*r.dir, r.f);
      a.tangent.push_back(weight_of(*r.dir) - weight_of(x0sq));
      for (const auto& q : quadrics)
        if (q != x0sq && q != *r.dir) a.tangent.push_back(weight_of(q) - weight_of(*r.dir));
      a.nu = weight_of(x0sq) + weight_of(r.f) - x0w;
    }
    return a;
  };

  Catalog cat;
  for (const auto& r : table1_rows()) {
    if (!r.generator) continue;
    Anchor a = table1_anchor(r);
    FixedPointRecord p;
    p.id = r.id();
    p.table = 1;
    p.row = r.id();
    p.stage = "Y";
    p.tangent = a.tangent;
    p.wfiber = a.nu;
    p.omega_generator = r.generator;
    cat.points.push_back(std::move(p));
  }

  std::map<std::string, Anchor> anchors;  // "T2.s2" -> tangent at that chart origin
  std::map<int, Anchor> line_groups;      // table -> (center + normal without 0, base nu)
  for (const auto& gj : j.at("groups")) {
    int table = gj.at("table").get<int>();
    const json& pj = gj.at("parent");
    Anchor parent;
    if (pj.contains("g")) {
      Polynomial g = parse_polynomial(pj.at("g").get<std::string>());
      Polynomial f = parse_polynomial(pj.at("f").get<std::string>());
      std::optional<Polynomial> dir;
      if (pj.contains("dir")) dir = parse_polynomial(pj.at("dir").get<std::string>());
      const Table1Row* hit = nullptr;
      for (const auto& r : table1_rows())
        if (r.g == g && r.f == f && r.dir == dir) hit = &r;
      if (!hit) throw std::logic_error("group parent not in Table 1");
      parent = table1_anchor(*hit);
    } else {
      parent = anchors.at("T" + std::to_string(pj.at("table").get<int>()) + "." + pj.at("row").get<std::string>());
    }
    std::vector<EigenWeight> center;
    for (const auto& c : gj.at("center")) center.push_back(parse_eigenweight(c.get<std::string>()));
    std::vector<EigenWeight> normal = multiset_minus(parent.tangent, center);

    std::vector<EigenWeight> row_dirs;
    for (const auto& r : table_rows()) {
      if (r.table != table) continue;
      EigenWeight dir = parse_eigenweight(r.eigenvector);
      row_dirs.push_back(dir);
      Anchor child{tangent_split_blowup(center, parent.tangent, dir), parent.nu + dir};
      anchors[r.id()] = child;
      if (r.kind != RowKind::Point) continue;
      FixedPointRecord p;
      p.id = r.id();
      p.table = table;
      p.row = r.row;
      p.stage = gj.at("stage").get<std::string>();
      p.tangent = child.tangent;
      p.wfiber = child.nu;
      p.omega_generator = r.generator;
      p.suspected_typo = r.suspected_typo;
      cat.points.push_back(std::move(p));
    }
    if (!same_multiset(row_dirs, normal))
      throw std::logic_error("table " + std::to_string(table) + ": eigenvectors do not match the normal weights");
    if (std::find(normal.begin(), normal.end(), EigenWeight{}) != normal.end()) {
      Anchor l;
      l.tangent = center;
      for (const auto& n : multiset_minus(normal, {EigenWeight{}})) l.tangent.push_back(n);
      l.nu = parent.nu;
      line_groups[table] = l;
    }
  }

  for (const auto& lj : j.at("lines")) {
    FixedLineRecord l;
    l.id = lj.at("id").get<std::string>();
    l.table = lj.at("table").get<int>();
    for (const auto& n : lj.at("normal")) l.normal_base.push_back(parse_eigenweight(n.get<std::string>()));
    int first = lj.at("first_slot").get<int>();
    for (int i = 0; i < 6; ++i) l.degree_slots[i] = first + i;
    const Anchor& g = line_groups.at(l.table);
    if (!same_multiset(l.normal_base, g.tangent))
      throw std::logic_error("line " + l.id + ": slot order is not a permutation of the derived normal weights");
    l.wfiber = g.nu;
    cat.lines.push_back(std::move(l));
  }
  if (cat.lines.size() != line_groups.size()) throw std::logic_error("unassigned fixed line");
  return cat;
}

}  // namespace

const Catalog& standard_catalog() {
  static const Catalog cat = build_standard();
  return cat;
}

Catalog build_catalog(const Flag& flag) {
  Catalog out = standard_catalog();
  for (auto& p : out.points) {
    for (auto& t : p.tangent) t = flag.apply(t);
    p.wfiber = flag.apply(p.wfiber);
    if (p.omega_generator) p.omega_generator = permute_form(*p.omega_generator, flag);
  }
  for (auto& l : out.lines) {
    for (auto& n : l.normal_base) n = flag.apply(n);
    l.wfiber = flag.apply(l.wfiber);
  }
  return out;
}

std::vector<CrossCheckEntry> cross_check_generators(const Flag& flag) {
  Catalog cat = build_catalog(flag);
  std::map<std::string, OneForm> computed;
  for (const auto& r : table1_rows()) computed[r.id()] = compute_table1(r);
  for (const auto& r : table_rows())
    if (r.kind == RowKind::Point) computed[r.id()] = compute_row(r);
  std::vector<CrossCheckEntry> out;
  for (const auto& p : cat.points) {
    OneForm w = permute_form(computed.at(p.id), flag);
    CrossCheckEntry e{p.id, p.omega_generator ? p.omega_generator->str() : "undef", w.str(), CheckStatus::Mismatch};
    e.status = compare_cell(p.omega_generator, w, p.suspected_typo);
    out.push_back(std::move(e));
  }
  return out;
}

json to_json(const FixedPointRecord& r) {
  json t = json::array();
  for (const auto& e : r.tangent) t.push_back(e.str());
  json j{{"id", r.id}, {"table", r.table}, {"row", r.row}, {"stage", r.stage}, {"tangent", t}, {"wfiber", r.wfiber.str()}};
  j["generator"] = r.omega_generator ? r.omega_generator->str() : "undef";
  if (r.suspected_typo) j["suspected_typo"] = true;
  return j;
}

json to_json(const FixedLineRecord& r) {
  json n = json::array();
  for (const auto& e : r.normal_base) n.push_back(e.str());
  return {{"id", r.id}, {"table", r.table}, {"normal", n}, {"slots", r.degree_slots}, {"wfiber", r.wfiber.str()}};
}

}  // namespace folbott
