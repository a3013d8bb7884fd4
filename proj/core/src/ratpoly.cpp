#include "folbott/ratpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace folbott {

namespace {

std::vector<std::string> build_alphabet() {
  std::vector<std::string> out;
  auto family = [&](char c, int lo, int hi) {
    for (int i = lo; i <= hi; ++i) out.push_back(std::string(1, c) + std::to_string(i));
  };
  family('x', 0, 3);
  family('a', 0, 6);
  family('b', 0, 3);
  family('u', 1, 3);
  family('s', 0, 5);
  family('t', 0, 4);
  family('v', 0, 4);
  family('z', 0, 5);
  family('w', 0, 3);
  out.emplace_back("h");
  family('y', 0, 3);
  return out;
}

const std::vector<std::string>& alphabet() {
  static const std::vector<std::string> names = [] {
    auto n = build_alphabet();
    if (n.size() != static_cast<std::size_t>(kNumVars)) throw std::logic_error("alphabet size");
    return n;
  }();
  return names;
}

}  // namespace

const std::string& var_name(VarId v) {
  if (v < 0 || v >= kNumVars) throw std::out_of_range("VarId out of range");
  return alphabet()[static_cast<std::size_t>(v)];
}

VarId var_id(std::string_view name) {
  static const std::unordered_map<std::string, VarId> index = [] {
    std::unordered_map<std::string, VarId> m;
    for (VarId i = 0; i < kNumVars; ++i) m.emplace(alphabet()[static_cast<std::size_t>(i)], i);
    return m;
  }();
  auto it = index.find(std::string(name));
  if (it == index.end()) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return it->second;
}

bool is_x_var(VarId v) { return v >= var::x0 && v <= var::x3; }

// ---- Monomial ----

Monomial Monomial::of(VarId v, unsigned e) {
  Monomial m;
  m.exp[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
  m.deg = e;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg > other.deg) return false;
  for (int i = 0; i < kNumVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + o.exp[i]);
  r.deg = deg + o.deg;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - o.exp[i]);
  r.deg = deg - o.deg;
  return r;
}

std::string Monomial::str() const {
  std::string s;
  for (VarId i = 0; i < kNumVars; ++i) {
    if (exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += var_name(i);
    if (exp[i] > 1) s += "^" + std::to_string(exp[i]);
  }
  return s.empty() ? "1" : s;
}

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
  if (a.deg != b.deg) return a.deg > b.deg;
  for (int i = 0; i < kNumVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  return false;
}

// ---- Polynomial ----

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial::one(), c);
}

Polynomial Polynomial::variable(VarId v) { return term(Monomial::of(v), 1); }

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.deg == 0);
}

Rational Polynomial::constant() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& Polynomial::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.begin();
}

unsigned Polynomial::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.exp[v]);
  return d;
}

bool Polynomial::uses(VarId v) const { return degree_in(v) > 0; }

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> out;
  for (VarId v = 0; v < kNumVars; ++v)
    if (uses(v)) out.push_back(v);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(VarId v) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    if (m.exp[v] == 0) continue;
    Monomial d = m;
    d.exp[v] -= 1;
    d.deg -= 1;
    r.add_term(d, c * m.exp[v]);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (m.deg == 0) {
      s += to_string(mag);
    } else if (mag == 1) {
      s += m.str();
    } else {
      s += to_string(mag) + "*" + m.str();
    }
  }
  return s;
}

Polynomial scale(const Polynomial& p, const Rational& c) { return p * c; }

Polynomial substitute(const Polynomial& p, const Bindings& b) {
  if (b.empty()) return p;
  // Cache powers of each bound image, they recur across terms.
  std::map<std::pair<VarId, unsigned>, Polynomial> cache;
  auto power = [&](VarId v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Polynomial& img = b.at(v);
    Polynomial val = (e == 1) ? img : img.pow(e);
    return cache.emplace(key, std::move(val)).first->second;
  };
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept = m;
    Polynomial factor(c);
    for (const auto& [v, img] : b) {
      unsigned e = m.exp[v];
      if (e == 0) continue;
      kept.exp[v] = 0;
      kept.deg -= e;
      factor *= power(v, e);
      if (factor.is_zero()) break;
    }
    if (factor.is_zero()) continue;
    Polynomial shifted;
    for (const auto& [fm, fc] : factor.terms()) shifted += Polynomial::term(fm * kept, fc);
    out += shifted;
  }
  return out;
}

DivisionResult divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& [lm, lc] = q.leading();
  DivisionResult r;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading();
    if (lm.divides(m)) {
      Polynomial t = Polynomial::term(m / lm, c / lc);
      rest -= t * q;
      r.quotient += t;
    } else {
      Polynomial t = Polynomial::term(m, c);
      r.remainder += t;
      rest -= t;
    }
  }
  return r;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
  auto r = divide(p, q);
  if (!r.remainder.is_zero())
    throw NotDivisible("(" + p.str() + ") is not divisible by (" + q.str() + ")");
  return r.quotient;
}

std::vector<std::pair<Monomial, Polynomial>> coefficients_in(const Polynomial& p,
                                                             const std::vector<VarId>& vars) {
  std::map<Monomial, Polynomial, GrlexDesc> groups;
  for (const auto& [m, c] : p.terms()) {
    Monomial inside;
    Monomial outside = m;
    for (VarId v : vars) {
      inside.exp[v] = m.exp[v];
      inside.deg += m.exp[v];
      outside.exp[v] = 0;
    }
    outside.deg -= inside.deg;
    groups[inside] += Polynomial::term(outside, c);
  }
  std::vector<std::pair<Monomial, Polynomial>> out;
  for (auto& [m, c] : groups) out.emplace_back(m, std::move(c));
  return out;
}

// ---- Parser ----

namespace {

struct Value {
  Polynomial s;
  std::array<Polynomial, 4> dx;
  bool form = false;
};

Value operator_add(Value a, const Value& b, bool minus) {
  if (a.form != b.form) throw ParseError("cannot add a scalar to a 1-form");
  if (minus) {
    a.s -= b.s;
    for (int i = 0; i < 4; ++i) a.dx[i] -= b.dx[i];
  } else {
    a.s += b.s;
    for (int i = 0; i < 4; ++i) a.dx[i] += b.dx[i];
  }
  return a;
}

Value operator_mul(const Value& a, const Value& b) {
  if (a.form && b.form) throw ParseError("product of two 1-forms");
  if (!a.form && !b.form) return Value{a.s * b.s, {}, false};
  const Value& f = a.form ? a : b;
  const Polynomial& k = a.form ? b.s : a.s;
  Value r;
  r.form = true;
  for (int i = 0; i < 4; ++i) r.dx[i] = f.dx[i] * k;
  return r;
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_dx) : s_(text), allow_dx_(allow_dx) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_primary() {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Value expr() {
    Value v = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      v = operator_add(std::move(v), term(), c == '-');
    }
    return v;
  }

  Value term() {
    Value v = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v = operator_mul(v, factor());
      } else if (c == '/') {
        ++pos_;
        Value d = factor();
        if (d.form || !d.s.is_constant() || d.s.is_zero()) fail("division only by a nonzero rational");
        Rational inv = 1 / d.s.constant();
        v = operator_mul(v, Value{Polynomial(inv), {}, false});
      } else if (starts_primary()) {
        v = operator_mul(v, factor());
      } else {
        break;
      }
    }
    return v;
  }

  Value factor() {
    char c = peek();
    if (c == '+') {
      ++pos_;
      return factor();
    }
    if (c == '-') {
      ++pos_;
      Value v = factor();
      return operator_mul(v, Value{Polynomial(-1), {}, false});
    }
    Value base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      if (base.form) fail("power of a 1-form");
      base.s = base.s.pow(e);
    }
    return base;
  }

  Value primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Value{Polynomial(Rational(Integer(std::string(s_.substr(start, pos_ - start))))), {}, false};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (s_.substr(pos_, 2) == "dx") {
        if (!allow_dx_) fail("differential not allowed here");
        pos_ += 2;
        if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '3') fail("expected dx0..dx3");
        int i = s_[pos_++] - '0';
        Value v;
        v.form = true;
        v.dx[i] = Polynomial(1);
        return v;
      }
      // Names are a letter followed by at most one digit ("h" has none).
      std::size_t start = pos_++;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      try {
        return Value{Polynomial::variable(var_id(name)), {}, false};
      } catch (const std::invalid_argument&) {
        fail("unknown variable '" + name + "'");
      }
    }
    fail("expected operand");
  }

  std::string_view s_;
  bool allow_dx_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedExpr parse_expression(std::string_view text, bool allow_dx) {
  Value v = Parser(text, allow_dx).parse();
  ParsedExpr out;
  out.has_dx = v.form;
  if (v.form) {
    out.dx = std::move(v.dx);
  } else {
    out.scalar = std::move(v.s);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) { return parse_expression(text, false).scalar; }

// ---- JSON ----

nlohmann::json rational_to_json(const Rational& r) {
  return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return parse_rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (VarId v = 0; v < kNumVars; ++v)
      if (m.exp[v]) exps[var_name(v)] = m.exp[v];
    terms.push_back({{"monomial", exps}, {"coeff", rational_to_json(c)}});
  }
  return terms;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>());
  Polynomial p;
  for (const auto& t : j) {
    Monomial m;
    for (const auto& [name, e] : t.at("monomial").items()) {
      VarId v = var_id(name);
      m.exp[v] = e.get<std::uint16_t>();
      m.deg += m.exp[v];
    }
    p += Polynomial::term(m, rational_from_json(t.at("coeff")));
  }
  return p;
}

}  // namespace folbott
