#pragma once

#include "folbott/extforms.hpp"
#include "folbott/resolve.hpp"
#include "folbott/torus.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace folbott {

class DirectionNotInNormal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// T = center + dir + { n - dir : n in (ambient - center) - dir }.
std::vector<EigenWeight> tangent_split_blowup(const std::vector<EigenWeight>& center,
                                              const std::vector<EigenWeight>& ambient,
                                              const EigenWeight& direction);

// Multiset difference; throws std::invalid_argument if `part` is not contained in `whole`.
std::vector<EigenWeight> multiset_minus(std::vector<EigenWeight> whole, const std::vector<EigenWeight>& part);

struct FixedPointRecord {
  std::string id;     // "T1(x0*x1,x0^2*x2)", "T2.s0"
  int table = 1;
  std::string row;
  std::string stage;  // Y, Y1..Y4
  std::vector<EigenWeight> tangent;
  EigenWeight wfiber;
  std::optional<OneForm> omega_generator;
  bool suspected_typo = false;
};

struct FixedLineRecord {
  std::string id;
  int table = 0;
  std::vector<EigenWeight> normal_base;  // slot order
  std::array<int, 6> degree_slots{};     // 1-based indices into d1..d30
  EigenWeight wfiber;
};

struct Catalog {
  std::vector<FixedPointRecord> points;
  std::vector<FixedLineRecord> lines;
};

// Records over the flag: built once for the standard flag, then relabelled.
Catalog build_catalog(const Flag& flag);
const Catalog& standard_catalog();

// Weight of the torus character spanned by a homogeneous x-only 1-form:
// the term m dx_i has weight w(m) + w_i. nullopt if the form is zero or mixed.
std::optional<EigenWeight> generator_weight(const OneForm& w);

// x_i -> x_perm[i].
OneForm permute_form(const OneForm& w, const Flag& flag);

// Recomputes every point generator through the resolve pipelines.
std::vector<CrossCheckEntry> cross_check_generators(const Flag& flag);

nlohmann::json to_json(const FixedPointRecord& r);
nlohmann::json to_json(const FixedLineRecord& r);

}  // namespace folbott
