#pragma once

#include "folbott/extforms.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace folbott {

// One blowup: e_0..e_n are the center equations. In chart i the variable
// solved by subs[i] is kept and E = e_i; every other subs[j] solves e_j = c_j E.
struct BlowupFamily {
  std::string name;
  std::vector<std::string> parent;  // path of "Family.chart" steps where it applies
  char coord = 's';
  std::vector<std::string> equations;
  std::vector<std::optional<std::pair<std::string, std::string>>> subs;  // (var, expr with E)
  std::vector<int> charts;  // charts with a defined substitution
};

struct Certificate {
  std::string name;
  std::vector<std::vector<std::pair<std::string, std::string>>> subs;  // applied in sequence
  std::vector<std::string> coords;
};

struct ChartPipeline {
  std::string id;
  std::vector<std::pair<std::string, std::string>> base_subs;
  std::vector<std::pair<std::string, std::string>> post_subs;
  std::vector<BlowupFamily> families;
  std::vector<Certificate> certificates;

  const BlowupFamily& family(const std::string& name) const;
};

// The five charts: "b3=a6=1", "b0=a0=u1=1", "b0=a0=u2=1", "b0=a0=u3=1", "b2=1".
const std::vector<ChartPipeline>& chart_pipelines();
const ChartPipeline& chart_pipeline(const std::string& id);

// f = a0x0^3 + ... + a6x1^3, g = b0x0^2 + b1x0x1 + b2x0x2 + b3x1^2.
Polynomial general_cubic();
Polynomial general_quadric();

class StageFailure : public std::runtime_error {
 public:
  StageFailure(const std::string& chart, const std::string& stage, const std::string& what)
      : std::runtime_error(chart + " / " + stage + ": " + what), chart_id(chart), stage_label(stage) {}
  std::string chart_id;
  std::string stage_label;
};

struct StageResult {
  std::string label;  // "C.s5"
  Polynomial exc;     // the exceptional equation divided out
  OneForm omega;
};

// omega in the chart before any blowup: (3f dg - 2g df)/x0 with the chart substitutions.
OneForm initial_omega(const ChartPipeline& chart);

// Applies the path steps in order. Throws StageFailure when a division is not exact.
std::vector<StageResult> run_pipeline(const ChartPipeline& chart, const std::vector<std::string>& path);

using PointValues = std::map<VarId, Rational>;

// Binds every non-x variable: explicit values, else 0, except those in `free`.
OneForm evaluate_fixed(const OneForm& w, const PointValues& point, const std::vector<VarId>& free = {});

struct LedgerEntry {
  std::string chart;
  std::string stage;  // full path, "C.s5 > E'.t1"
  std::string exc;
  bool divisible = false;
  bool projective = false;  // sum A_i x_i == 0 after the stage
  std::string message;
};

// Every (family, chart) pair of every pipeline, at its parent path.
std::vector<LedgerEntry> divisibility_ledger();

struct CertificateResult {
  std::string chart;
  std::string name;
  bool ok = false;
  std::vector<std::string> forced_order;
};

CertificateResult no_indeterminacy_certificate(const ChartPipeline& chart, const Certificate& cert);

// ---- table fixtures ----

struct Table1Row {
  Polynomial g;
  std::optional<Polynomial> dir;  // set for the rows over g = x0^2
  Polynomial f;
  std::string generator_text;
  std::optional<OneForm> generator;  // nullopt for "not defined"
  std::string id() const;
};

enum class RowKind { Point, Undefined, Family, OnLine };

struct TableRow {
  int table = 0;
  std::string chart;
  std::string row;
  std::string eigenvector;
  RowKind kind = RowKind::Point;
  std::vector<std::string> path;
  PointValues point;
  std::vector<VarId> free;
  std::string generator_text;
  std::optional<OneForm> generator;
  bool suspected_typo = false;
  std::string id() const;  // "T2.s0"
};

const std::vector<Table1Row>& table1_rows();
const std::vector<TableRow>& table_rows();
const TableRow& table_row(int table, const std::string& row);

OneForm compute_table1(const Table1Row& r);
OneForm compute_row(const TableRow& r);

enum class CheckStatus { Match, ZeroAsExpected, DocumentedMismatch, Mismatch };
std::string to_string(CheckStatus s);

struct CrossCheckEntry {
  std::string id;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::Mismatch;
};

CheckStatus compare_cell(const std::optional<OneForm>& expected, const OneForm& computed, bool suspected_typo);

// Every cell of every table against the pipelines.
std::vector<CrossCheckEntry> cross_check_tables();

}  // namespace folbott
