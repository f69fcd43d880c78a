#pragma once

#include <map>
#include <string>
#include <vector>

#include "halfint/form_io.hpp"
#include "halfint/special_functions.hpp"

namespace halfint::cli {

struct RunConfig {
  Precision precision;
  int truncation = 300;
  int samples = 10;
  unsigned long seed = 0;
  std::map<std::string, double> tolerances;
  std::string out_dir = "halfint_out";
  std::string form = "f13";
  std::vector<std::string> basis = {"g6"};
  std::string a = "9/2";
  bool expensive = false;

  double tol(const std::string& check) const;
  void validate() const;
};

RunConfig config_from_json(const Json& j, RunConfig base = {});
Json config_to_json(const RunConfig& c);

using CsvTable = std::vector<std::vector<std::string>>;

struct CheckResult {
  std::string name;
  bool pass = false;
  Json detail;
  CsvTable table;
};

class UnvalidatedFormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bundled name or a form file; files must carry status "validated".
FourierExpansion load_form(const std::string& source, int truncation);

std::string fmt(double x);
std::string fmt(Complex z);

CheckResult check_fe(const RunConfig& c);
CheckResult check_eich(const RunConfig& c);
CheckResult check_transf(const RunConfig& c);
CheckResult check_brug(const RunConfig& c);
CheckResult check_cocycle(const RunConfig& c);
CheckResult check_w_membership(const RunConfig& c);
CheckResult check_kreich(const RunConfig& c);

const std::vector<std::string>& verify_names();
CheckResult run_check(const std::string& name, const RunConfig& c);

CheckResult lvalue_table(const RunConfig& c, const std::vector<double>& s_list);
CheckResult period_report(const RunConfig& c);
CheckResult lift_pair_report(const RunConfig& c);
CheckResult lift_odd_report(const RunConfig& c);

void write_csv(const std::string& path, const CsvTable& t);
// Writes <stem>.json and, when the table is non-empty, <stem>.csv into the output directory.
void write_artifacts(const RunConfig& c, const std::string& stem, const CheckResult& r);

}  // namespace halfint::cli
