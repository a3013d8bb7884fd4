#include "folbott/torus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace folbott {

EigenWeight EigenWeight::operator+(const EigenWeight& o) const {
  EigenWeight r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

EigenWeight EigenWeight::operator-(const EigenWeight& o) const {
  EigenWeight r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

EigenWeight EigenWeight::operator-() const { return EigenWeight{} - *this; }

EigenWeight EigenWeight::operator*(int k) const {
  EigenWeight r;
  for (int i = 0; i < 4; ++i) r.c[i] = c[i] * k;
  return r;
}

Integer EigenWeight::evaluate(const WeightVector& w) const {
  Integer s = 0;
  for (int i = 0; i < 4; ++i) s += Integer(c[i]) * Integer(w[i]);
  return s;
}

Polynomial EigenWeight::as_polynomial(bool in_x) const {
  Polynomial p;
  for (int i = 0; i < 4; ++i)
    p += Polynomial::variable((in_x ? var::x0 : var::w0) + i) * Rational(c[i]);
  return p;
}

std::string EigenWeight::str() const { return as_polynomial().str(); }

EigenWeight parse_eigenweight(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Polynomial num = parse_polynomial(s.substr(0, slash));
    Polynomial den = parse_polynomial(s.substr(slash + 1));
    if (num.size() != 1 || den.size() != 1) throw ParseError("eigenvector must be a monomial ratio: " + s);
    return monomial_weight(num.leading().first) - monomial_weight(den.leading().first);
  }
  Polynomial p = parse_polynomial(s);
  EigenWeight e;
  for (const auto& [m, coef] : p.terms()) {
    if (m.deg == 0 && p.size() == 1 && coef == 1) return e;  // "1": the trivial character
    if (m.deg != 1 || coef.get_den() != 1) throw ParseError("not an integer linear form: " + s);
    for (int i = 0; i < 4; ++i) {
      if (m.exp[var::x0 + i] || m.exp[var::w0 + i]) e.c[i] += static_cast<int>(coef.get_num().get_si());
    }
  }
  return e;
}

std::vector<EigenWeight> sorted(std::vector<EigenWeight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool same_multiset(const std::vector<EigenWeight>& a, const std::vector<EigenWeight>& b) {
  return sorted(a) == sorted(b);
}

WeightValidation check_weights(const WeightVector& w) {
  WeightValidation out;
  auto scan = [&](int arity) {
    std::map<long, std::string> seen;
    std::vector<int> idx(static_cast<std::size_t>(arity), 0);
    // non-decreasing index tuples
    std::function<void(int, int)> rec = [&](int pos, int start) {
      if (pos == arity) {
        long sum = 0;
        std::string label;
        for (int k = 0; k < arity; ++k) {
          sum += w[idx[k]];
          label += (k ? "+w" : "w") + std::to_string(idx[k]);
        }
        auto [it, fresh] = seen.emplace(sum, label);
        if (!fresh) {
          out.ok = false;
          out.collisions.push_back(it->second + " = " + label + " = " + std::to_string(sum));
        }
        return;
      }
      for (int i = start; i < 4; ++i) {
        idx[pos] = i;
        rec(pos + 1, i);
      }
    };
    rec(0, 0);
  };
  scan(1);
  scan(2);
  scan(3);
  return out;
}

bool validate_weights(const WeightVector& w) { return check_weights(w).ok; }

EigenWeight monomial_weight(const Monomial& m) {
  EigenWeight e;
  for (VarId v = 0; v < kNumVars; ++v) {
    if (!m.exp[v]) continue;
    if (!is_x_var(v)) throw std::invalid_argument("monomial_weight: non-x variable " + var_name(v));
    e.c[v - var::x0] += m.exp[v];
  }
  return e;
}

EigenWeight chart_local_weight(const EigenWeight& global, const EigenWeight& chart) { return global - chart; }

DualClass DualClass::inverse() const {
  if (a == 0) throw DivByZeroWeight("inverse of a dual class with zero weight part");
  return {1 / a, -b / (a * a)};
}

DualClass DualClass::pow(unsigned e) const {
  DualClass r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string DualClass::str() const { return to_string(a) + " + (" + to_string(b) + ")h"; }

EigenWeight Flag::apply(const EigenWeight& e) const {
  EigenWeight r;
  for (int i = 0; i < 4; ++i) r.c[perm[i]] += e.c[i];
  return r;
}

std::string Flag::str() const {
  std::ostringstream os;
  os << '(' << perm[0] << ';' << perm[1] << ';' << perm[2] << ';' << perm[3] << ')';
  return os.str();
}

std::vector<Flag> enumerate_fixed_flags(const WeightVector& w) {
  if (!validate_weights(w)) throw std::invalid_argument("enumerate_fixed_flags: invalid weights");
  std::vector<Flag> out;
  Flag f;
  do {
    out.push_back(f);
  } while (std::next_permutation(f.perm.begin(), f.perm.end()));
  return out;
}

std::array<EigenWeight, 6> flag_tangent_class(const Flag& flag) {
  std::array<EigenWeight, 6> out;
  int n = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) out[n++] = EigenWeight::of(flag.perm[b]) - EigenWeight::of(flag.perm[a]);
  return out;
}

Integer flag_tangent_product(const Flag& flag, const WeightVector& w) {
  Integer p = 1;
  for (const auto& e : flag_tangent_class(flag)) p *= e.evaluate(w);
  return p;
}

WeightVector parse_weights(const std::string& text) {
  WeightVector w{};
  std::stringstream ss(text);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n == 4) throw std::invalid_argument("expected 4 weights, got more: " + text);
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    std::string tok = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != tok.size()) throw std::invalid_argument("bad weight '" + item + "'");
    w[n++] = v;
  }
  if (n != 4) throw std::invalid_argument("expected 4 comma-separated weights: " + text);
  return w;
}

}  // namespace folbott
