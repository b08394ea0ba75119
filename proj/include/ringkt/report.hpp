#pragma once

// Flat, serializable reports. JSON is produced with a fixed key order so
// identical inputs give byte-identical output; integers that may exceed 64
// bits are written as decimal strings.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringkt/limit.hpp"

namespace ringkt {

struct EtaReport {
  std::int64_t c = 0;
  std::vector<std::string> basis;
  IntMatrix finite_block;
  std::vector<std::string> inf_diagonal;  // "c^2", "c^0", ...
  friend bool operator==(const EtaReport&, const EtaReport&) = default;
};

EtaReport eta_report(const EtaMatrix& e);

struct FieldReport {
  std::string name;
  int n = 0;
  int m = 0;
  std::size_t real_places = 0;
  std::string modulus;        // D in the integral basis
  std::string modulus_norm;
  Integer discriminant;
  std::string mu_verdict;
  std::string mu_detail;
  std::vector<std::string> maximal_classes;
  IntVector inf_ranks;
  int delta = 0;
  friend bool operator==(const FieldReport&, const FieldReport&) = default;
};

FieldReport field_report(const SemidirectGroup& g);

struct Report {
  FieldReport field;
  std::string target;
  std::optional<std::int64_t> c;
  int depth = 0;
  std::optional<EtaReport> eta;
  std::optional<GradedGroup> subalgebra;
  std::optional<GradedGroup> pv;
  std::vector<GradedGroup> tower;
  std::optional<KFormula> roots_branch;
  KFormula real_branch;
  KFormula final_formula;
  std::map<std::string, bool> checks;
  std::string note;
  friend bool operator==(const Report&, const Report&) = default;
};

Report make_report(const SemidirectGroup& g, const KTheoryReport& k);

std::string to_json(const Report& r, int indent = 2);
Report report_from_json(const std::string& text);
std::string to_json(const EtaReport& e, int indent = 2);
std::string to_json(const FieldReport& f, int indent = 2);
std::string to_json(const GradedGroup& g, int indent = 2);

/// Matrix file: {"rows": [[...], ...], "parameter": c} or a bare array of
/// rows; entries are integers or decimal strings.
struct MatrixInput {
  IntMatrix a;
  std::optional<Integer> parameter;
};
MatrixInput parse_matrix_input(const std::string& text);

std::string summary_text(const Report& r);
std::string summary_text(const FieldReport& f);

}  // namespace ringkt
