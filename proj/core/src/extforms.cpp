#include "folbott/extforms.hpp"

namespace folbott {

bool OneForm::is_zero() const {
  for (const auto& a : A)
    if (!a.is_zero()) return false;
  return true;
}

OneForm OneForm::operator+(const OneForm& o) const {
  OneForm r;
  for (int i = 0; i < 4; ++i) r.A[i] = A[i] + o.A[i];
  return r;
}

OneForm OneForm::operator-(const OneForm& o) const {
  OneForm r;
  for (int i = 0; i < 4; ++i) r.A[i] = A[i] - o.A[i];
  return r;
}

OneForm OneForm::operator-() const {
  OneForm r;
  for (int i = 0; i < 4; ++i) r.A[i] = -A[i];
  return r;
}

OneForm OneForm::operator*(const Polynomial& p) const {
  OneForm r;
  for (int i = 0; i < 4; ++i) r.A[i] = A[i] * p;
  return r;
}

std::string OneForm::str() const {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    for (const auto& [m, c] : A[i].terms()) {
      bool neg = c < 0;
      if (s.empty()) {
        if (neg) s += '-';
      } else {
        s += neg ? " - " : " + ";
      }
      Rational mag = abs(c);
      if (mag != 1) s += to_string(mag);
      if (m.deg > 0) {
        std::string mono = m.str();
        // juxtaposition reads like the tables: x0^2x1
        std::string compact;
        for (char ch : mono)
          if (ch != '*') compact += ch;
        if (mag != 1 && mag.get_den() != 1) s += "*";
        s += compact;
      }
      s += "dx" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

OneForm parse_oneform(std::string_view text) {
  ParsedExpr e = parse_expression(text, true);
  if (!e.has_dx) {
    if (e.scalar.is_zero()) return {};
    throw ParseError("not a 1-form: '" + std::string(text) + "'");
  }
  OneForm w;
  w.A = std::move(e.dx);
  return w;
}

OneForm differential(const Polynomial& p) {
  OneForm w;
  for (int i = 0; i < 4; ++i) w.A[i] = p.derivative(var::x0 + i);
  return w;
}

OneForm build_omega(const Polynomial& f, const Polynomial& g, const Polynomial& h) {
  if (h.is_zero()) throw std::domain_error("build_omega: h = 0");
  OneForm df = differential(f);
  OneForm dg = differential(g);
  OneForm w;
  for (int i = 0; i < 4; ++i) {
    Polynomial num = f * dg.A[i] * Rational(3) - g * df.A[i] * Rational(2);
    w.A[i] = exact_divide(num, h);
  }
  return w;
}

std::array<Polynomial, 4> singular_locus_coeffs(const OneForm& w) { return w.A; }

Polynomial euler_contraction(const OneForm& w) {
  Polynomial s;
  for (int i = 0; i < 4; ++i) s += w.A[i] * Polynomial::variable(var::x0 + i);
  return s;
}

std::array<Polynomial, 4> wedge_d(const OneForm& w) {
  // dw = sum_{j<k} B[j][k] dxj^dxk with B[j][k] = d_j A_k - d_k A_j
  Polynomial B[4][4];
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      if (j != k) B[j][k] = w.A[k].derivative(var::x0 + j) - w.A[j].derivative(var::x0 + k);
  static constexpr int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::array<Polynomial, 4> out;
  for (int t = 0; t < 4; ++t) {
    auto [i, j, k] = triples[t];
    out[t] = w.A[i] * B[j][k] - w.A[j] * B[i][k] + w.A[k] * B[i][j];
  }
  return out;
}

bool vanishes_on_parametrization(const std::vector<Polynomial>& polys, const Bindings& param) {
  for (const auto& p : polys)
    if (!substitute(p, param).is_zero()) return false;
  return true;
}

OneForm substitute(const OneForm& w, const Bindings& b) {
  OneForm r;
  for (int i = 0; i < 4; ++i) r.A[i] = substitute(w.A[i], b);
  return r;
}

OneForm exact_divide(const OneForm& w, const Polynomial& q) {
  OneForm r;
  for (int i = 0; i < 4; ++i) r.A[i] = exact_divide(w.A[i], q);
  return r;
}

std::optional<Rational> proportionality(const OneForm& a, const OneForm& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  for (int i = 0; i < 4; ++i) {
    if (a.A[i].is_zero()) continue;
    const auto& [m, c] = a.A[i].leading();
    auto it = b.A[i].terms().find(m);
    if (it == b.A[i].terms().end()) return std::nullopt;
    Rational lambda = it->second / c;
    if (a * Polynomial(lambda) == b) return lambda;
    return std::nullopt;
  }
  return std::nullopt;
}

nlohmann::json to_json(const OneForm& w) {
  nlohmann::json j = nlohmann::json::object();
  for (int i = 0; i < 4; ++i) j["dx" + std::to_string(i)] = to_json(w.A[i]);
  j["text"] = w.str();
  return j;
}

}  // namespace folbott

namespace folbott {

Polynomial exceptional_f0() { return parse_polynomial("x0^2x3 - x0x1x2 + x1^3/3"); }
Polynomial exceptional_g0() { return parse_polynomial("x0x2 - x1^2/2"); }
OneForm omega0() { return build_omega(exceptional_f0(), exceptional_g0(), Polynomial::variable(var::x0)); }

std::vector<ParametrizedCurve> omega0_test_curves() {
  auto param = [](const char* a, const char* b, const char* c, const char* d) {
    return Bindings{{var::x0, parse_polynomial(a)},
                    {var::x0 + 1, parse_polynomial(b)},
                    {var::x0 + 2, parse_polynomial(c)},
                    {var::x0 + 3, parse_polynomial(d)}};
  };
  std::vector<ParametrizedCurve> out;
  out.push_back({"line x0=x1=0", param("0", "0", "y0", "y1"),
                 {parse_polynomial("x0"), parse_polynomial("x1")}, true});
  out.push_back({"conic x0=0, x2^2=2x1x3", param("0", "y0^2", "2y0y1", "2y1^2"),
                 {parse_polynomial("x0"), parse_polynomial("x2^2 - 2x1x3")}, true});
  // x0 = 1, x1 = u gives x2 = u^2/2, x3 = u^3/6; homogenized and scaled by 6.
  out.push_back({"twisted cubic", param("6y0^3", "6y0^2y1", "3y0y1^2", "y1^3"),
                 {parse_polynomial("2x2^2 - 3x1x3"), parse_polynomial("x1x2 - 3x0x3"), parse_polynomial("x1^2 - 2x0x2")},
                 true});
  out.push_back({"line x2=x3=0", param("y0", "y1", "0", "0"), {parse_polynomial("x2"), parse_polynomial("x3")}, false});
  return out;
}

}  // namespace folbott
