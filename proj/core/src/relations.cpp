#include "folbott/relations.hpp"

#include <algorithm>
#include <regex>

namespace folbott {

RelationSystem build_system(const WeightVector& w, unsigned jobs) {
  (void)jobs;
  RelationSystem sys;
  for (const auto& f : enumerate_fixed_flags(w)) sys.sums.push_back({f, raw_flag_sum(f, w, 7)});
  for (std::size_t i = 1; i < sys.sums.size(); ++i) sys.equations.push_back(sys.sums[i].sum - sys.sums[0].sum);
  return sys;
}

namespace {

int first_slot(const LinearForm& r) {
  for (int i = 0; i < kNumSlots; ++i)
    if (r.d[i] != 0) return i + 1;
  return 0;
}

}  // namespace

RelationSet solve_relations(const std::vector<LinearForm>& equations) {
  std::vector<LinearForm> m = equations;
  RelationSet out;
  std::size_t row = 0;
  for (int col = 1; col <= kNumSlots && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv].coeff(col) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    m[row] = m[row] * (1 / m[row].coeff(col));
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r].coeff(col) == 0) continue;
      m[r] = m[r] - m[row] * m[r].coeff(col);
    }
    out.pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m.size(); ++r)
    if (m[r].constant != 0) throw InconsistentSystem("relation system reduces to " + to_string(m[r].constant) + " = 0");
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

LinearForm reduce(const LinearForm& expr, const RelationSet& rels) {
  LinearForm r = expr;
  for (std::size_t i = 0; i < rels.rows.size(); ++i) {
    Rational c = r.coeff(rels.pivots[i]);
    if (c != 0) r = r - rels.rows[i] * c;
  }
  return r;
}

Rational substitute_relations(const LinearForm& expr, const RelationSet& rels) {
  LinearForm r = reduce(expr, rels);
  if (!r.is_constant()) throw ResidualUnknowns("unknowns remain after the relations: " + r.str());
  return r.constant;
}

bool same_row_space(const std::vector<LinearForm>& a, const std::vector<LinearForm>& b) {
  RelationSet ra = solve_relations(a);
  RelationSet rb = solve_relations(b);
  return ra.pivots == rb.pivots && ra.rows == rb.rows;
}

LinearForm primitive(const LinearForm& row) {
  Integer l = row.constant.get_den();
  for (const auto& c : row.d) l = lcm(l, Integer(c.get_den()));
  LinearForm r = row * Rational(l);
  Integer g = r.constant.get_num();
  for (const auto& c : r.d) g = gcd(g, Integer(c.get_num()));
  if (g == 0) return r;
  int lead = first_slot(r);
  if (lead && r.coeff(lead) < 0) g = -g;
  return r * (Rational(1) / Rational(g));
}

std::string relation_str(const LinearForm& row) {
  LinearForm p = primitive(row);
  int nz = 0;
  for (const auto& c : p.d)
    if (c != 0) ++nz;
  if (nz == 1) {
    int s = first_slot(p);
    Rational val = -p.constant / p.coeff(s);
    return "d" + std::to_string(s) + " = " + to_string(val);
  }
  return p.str() + " = 0";
}

LinearForm parse_relation(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw ParseError("relation without '=': " + text);
  auto side = [](const std::string& s) {
    LinearForm f;
    std::string t;
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    std::regex term(R"(([+-]?)(\d*)(?:\*?d(\d+))?)");
    std::size_t pos = 0;
    while (pos < t.size()) {
      std::smatch m;
      std::string rest = t.substr(pos);
      if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) || m.length(0) == 0)
        throw ParseError("bad relation term in '" + s + "'");
      Rational k = m[2].length() ? Rational(Integer(m[2].str())) : Rational(1);
      if (m[1] == "-") k = -k;
      if (m[3].length()) {
        f.d.at(static_cast<std::size_t>(std::stoi(m[3].str()) - 1)) += k;
      } else {
        if (!m[2].length()) throw ParseError("bad relation term in '" + s + "'");
        f.constant += k;
      }
      pos += static_cast<std::size_t>(m.length(0));
    }
    return f;
  };
  return side(text.substr(0, eq)) - side(text.substr(eq + 1));
}

// ---- normal twists ----

std::string NormalTwistEquation::str() const {
  auto side = [&](char letter) {
    std::string s;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      if (coeff[i] == 0) continue;
      Integer mag = abs(coeff[i]);
      s += s.empty() ? (coeff[i] < 0 ? "-" : "") : (coeff[i] < 0 ? " - " : " + ");
      if (mag != 1) s += mag.get_str();
      s += letter + std::to_string(i + 1);
    }
    return s;
  };
  std::string rhs = side('b');
  if (constant != 0) rhs += (constant < 0 ? " - " : " + ") + Integer(abs(constant)).get_str();
  return side('a') + " = " + rhs;
}

NormalTwistResult normal_twist_check(int N, int m) {
  if (N < 2 || m < 0 || m > N - 2) throw std::invalid_argument("normal-twist-check needs N >= 2 and 0 <= m <= N-2");
  NormalTwistResult res;
  res.N = N;
  res.m = m;
  // Weight forms live in a (N+1)-variable space here; represent them by coefficient vectors.
  using Form = std::vector<int>;
  auto diff = [&](int i, int j) {
    Form f(static_cast<std::size_t>(N + 1), 0);
    f[static_cast<std::size_t>(i)] += 1;
    f[static_cast<std::size_t>(j)] -= 1;
    return f;
  };
  auto sub = [](Form a, const Form& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  std::vector<std::vector<Rational>> rows;  // over (b - a) shift unknowns, last entry constant
  for (int v = 2; v <= N; ++v) {
    std::vector<Integer> w(static_cast<std::size_t>(N + 1));
    w[0] = w[1] = 1;
    for (int i = 2; i <= N; ++i) w[static_cast<std::size_t>(i)] = v + i - 2;
    auto eval = [&](const Form& f) {
      Integer s = 0;
      for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * w[i];
      return Rational(s);
    };
    // Tangent at the fixed point x0: x0 - x_i. The line is x0 - x1 (weight 0).
    std::vector<Form> nl, td, nd;
    for (int i = 2; i <= N; ++i) nl.push_back(diff(0, i));
    for (int i = 2; i <= m + 1; ++i) td.push_back(diff(0, i));
    nd.push_back(diff(0, 1));
    for (int i = m + 2; i <= N; ++i) nd.push_back(diff(0, i));
    // Points over x0 in the exceptional divisor, off the strict transform.
    Rational points = 0;
    for (std::size_t e = 1; e < nd.size(); ++e) {
      Rational den = 1;
      for (const auto& t : td) den *= eval(t);
      den *= eval(nd[e]);
      for (std::size_t k = 0; k < nd.size(); ++k)
        if (k != e) den *= eval(sub(nd[k], nd[e]));
      points += 1 / den;
    }
    // Line integral of (1+h)^N over prod(n_i + t_i h): linear in the twists t.
    Rational wn = 1;
    for (const auto& n : nl) wn *= eval(n);
    std::vector<Rational> lin;  // coefficient of t_{i+1}
    for (std::size_t i = 0; i < nl.size(); ++i) {
      std::vector<DualClass> normals;
      for (std::size_t k = 0; k < nl.size(); ++k) normals.emplace_back(eval(nl[k]), k == i ? 1 : 0);
      std::vector<DualClass> zero;
      for (std::size_t k = 0; k < nl.size(); ++k) zero.emplace_back(eval(nl[k]), 0);
      lin.push_back(line_integral(DualClass(1, 1).pow(static_cast<unsigned>(N)), normals) -
                    line_integral(DualClass(1, 1).pow(static_cast<unsigned>(N)), zero));
    }
    // Blown-up side minus the original side: sum lin_i (b_i - a_i) + points = 0.
    std::vector<Rational> row(lin);
    row.push_back(points);
    rows.push_back(row);

    Integer l = 1;
    for (const auto& c : row) l = lcm(l, Integer(c.get_den()));
    Integer g = 0;
    for (const auto& c : row) g = gcd(g, Rational(c * l).get_num());
    if (lin.front() * l / g < 0) g = -g;
    NormalTwistEquation eq;
    eq.v = v;
    for (std::size_t i = 0; i < lin.size(); ++i) eq.coeff.push_back(Rational(lin[i] * l / g).get_num());
    // sum c_i b_i + c0 = sum c_i a_i  with c0 the scaled point sum
    eq.constant = Rational(row.back() * l / g).get_num();
    res.equations.push_back(eq);
  }
  // Solve sum lin_i s_i = -points for the shift s = b - a.
  std::size_t n = static_cast<std::size_t>(N - 1);
  std::vector<std::vector<Rational>> a = rows;
  std::size_t r = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k == r || a[k][c] == 0) continue;
      Rational f = a[k][c];
      for (std::size_t j = 0; j <= n; ++j) a[k][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  res.unique = (r == n);
  if (res.unique) {
    res.shift.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) res.shift[piv[k]] = -a[k][n];
    res.matches_expected = true;
    for (std::size_t i = 0; i < n; ++i) {
      Rational want = (static_cast<int>(i) + 1 <= m) ? 0 : -1;
      if (res.shift[i] != want) res.matches_expected = false;
    }
  }
  return res;
}

}  // namespace folbott
