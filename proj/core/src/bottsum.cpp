#include "folbott/bottsum.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace folbott {

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm r = *this;
  return r += o;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant += o.constant;
  for (int i = 0; i < kNumSlots; ++i) d[i] += o.d[i];
  return *this;
}

LinearForm LinearForm::operator-() const { return *this * Rational(-1); }

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (-o); }

LinearForm LinearForm::operator*(const Rational& k) const {
  LinearForm r;
  r.constant = constant * k;
  for (int i = 0; i < kNumSlots; ++i) r.d[i] = d[i] * k;
  return r;
}

bool LinearForm::is_constant() const {
  return std::all_of(d.begin(), d.end(), [](const Rational& c) { return c == 0; });
}

std::string LinearForm::str() const {
  std::string s;
  for (int i = 0; i < kNumSlots; ++i) {
    if (d[i] == 0) continue;
    Rational mag = abs(d[i]);
    s += s.empty() ? (d[i] < 0 ? "-" : "") : (d[i] < 0 ? " - " : " + ");
    if (mag != 1) s += to_string(mag) + (is_integer(mag) ? "" : "*");
    s += "d" + std::to_string(i + 1);
  }
  if (constant != 0 || s.empty()) {
    if (s.empty()) return to_string(constant);
    s += constant < 0 ? " - " : " + ";
    s += to_string(abs(constant));
  }
  return s;
}

nlohmann::json LinearForm::to_json() const {
  nlohmann::json j;
  j["constant"] = rational_to_json(constant);
  nlohmann::json coeffs = nlohmann::json::object();
  for (int i = 0; i < kNumSlots; ++i)
    if (d[i] != 0) coeffs["d" + std::to_string(i + 1)] = rational_to_json(d[i]);
  j["coefficients"] = coeffs;
  return j;
}

namespace {

Rational flag_factor(const Flag& flag, const WeightVector& w, int power) {
  if (power == 7) return 1;
  if (power == 13) return Rational(flag_tangent_product(flag, w));
  throw std::invalid_argument("power must be 7 or 13");
}

}  // namespace

Rational point_contribution(const FixedPointRecord& rec, const Flag& flag, const WeightVector& w, int power) {
  Rational den = flag_factor(flag, w, power);
  for (const auto& t : rec.tangent) den *= Rational(t.evaluate(w));
  if (den == 0) throw ZeroDenominator("zero tangent weight at " + rec.id + " over " + flag.str());
  return -pow(Rational(rec.wfiber.evaluate(w)), static_cast<unsigned>(power)) / den;
}

LinearForm line_contribution(const FixedLineRecord& rec, const Flag& flag, const WeightVector& w, int power) {
  Rational tg = flag_factor(flag, w, power);
  if (tg == 0) throw ZeroDenominator("zero flag weight over " + flag.str());
  DualClass num(-pow(Rational(rec.wfiber.evaluate(w)), static_cast<unsigned>(power)) / tg);
  std::vector<Rational> weights;
  for (const auto& n : rec.normal_base) weights.emplace_back(n.evaluate(w));
  LinearForm out;
  // Linear in the twists: read off each slot with a unit twist.
  for (std::size_t i = 0; i < weights.size(); ++i) {
    std::vector<DualClass> normals;
    for (std::size_t k = 0; k < weights.size(); ++k) normals.emplace_back(weights[k], k == i ? 1 : 0);
    try {
      out.d[static_cast<std::size_t>(rec.degree_slots[i] - 1)] += line_integral(num, normals);
    } catch (const DivByZeroWeight&) {
      throw ZeroDenominator("zero normal weight on " + rec.id + " over " + flag.str());
    }
  }
  return out;
}

Rational line_integral(const DualClass& numerator, const std::vector<DualClass>& normals) {
  DualClass c(1);
  for (const auto& n : normals) c = c * n;
  return (numerator * c.inverse()).b;
}

LinearForm flag_contribution(const Flag& flag, const WeightVector& w, int power) {
  Catalog cat = build_catalog(flag);
  LinearForm s;
  for (const auto& p : cat.points) s.constant += point_contribution(p, flag, w, power);
  for (const auto& l : cat.lines) s += line_contribution(l, flag, w, power);
  return s;
}

LinearForm raw_flag_sum(const Flag& flag, const WeightVector& w, int power) {
  return -flag_contribution(flag, w, power);
}

LinearForm total_degree_form(const WeightVector& w, int power, unsigned jobs) {
  std::vector<Flag> flags = enumerate_fixed_flags(w);
  if (power == 7) return flag_contribution(flags.front(), w, 7);
  std::vector<LinearForm> parts(flags.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(flags.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < flags.size(); i = next++) parts[i] = flag_contribution(flags[i], w, power);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  LinearForm total;
  for (const auto& p : parts) total += p;
  return total;
}

ThreePlanesResult three_planes_demo() {
  // P^3 with weights (1,1,2,3), blown up along {x1 = x2 = 0}. The line
  // {x2 = x3 = 0} is pointwise fixed since w0 = w1.
  const WeightVector w{1, 1, 2, 3};
  auto x = [](int i) { return EigenWeight::of(i); };
  auto eval = [&](const EigenWeight& e) -> Rational { return Rational(e.evaluate(w)); };
  auto point = [&](const std::vector<EigenWeight>& tangent, const EigenWeight& c1) -> Rational {
    Rational den = 1;
    for (const auto& t : tangent) den *= eval(t);
    return pow(eval(c1), 3) / den;
  };
  ThreePlanesResult r;
  r.contributions.push_back({"p2", point({x(2) - x(0), x(2) - x(1), x(2) - x(3)}, x(2))});
  std::vector<EigenWeight> amb3{x(3) - x(0), x(3) - x(1), x(3) - x(2)};
  r.contributions.push_back({"q1", point(tangent_split_blowup({x(3) - x(0)}, amb3, x(3) - x(1)), x(3))});
  r.contributions.push_back({"q2", point(tangent_split_blowup({x(3) - x(0)}, amb3, x(3) - x(2)), x(3))});
  std::vector<EigenWeight> amb0{x(0) - x(1), x(0) - x(2), x(0) - x(3)};
  r.contributions.push_back({"r2", point(tangent_split_blowup({x(0) - x(3)}, amb0, x(0) - x(2)), x(0))});
  DualClass c1(eval(x(0)), 1);
  r.contributions.push_back(
      {"line", line_integral(c1.pow(3), {DualClass(eval(x(0) - x(3)), 1), DualClass(eval(x(0) - x(2)), 0)})});
  for (const auto& c : r.contributions) r.total += c.value;
  return r;
}

}  // namespace folbott
