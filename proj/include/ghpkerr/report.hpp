#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghpkerr/types.hpp"

namespace ghpkerr {

struct RunConfig {
  double mass = 1.0;
  double spin = 0.5;
  int s_doubled = 4;
  std::vector<double> grid_r;  // radial grid override for the operator sweeps
  std::uint64_t seed = 0xC0FFEE;
  double tol_abs = 1e-8;
  double tol_rel = 1e-6;
  std::string format = "json";  // json | csv
  std::string out_path;         // empty -> stdout
};

struct SuiteResult {
  std::string name;
  double max_abs = 0.0;
  double max_rel = 0.0;
  bool pass = true;
  RVec4 worst_point = RVec4::Zero();
};

struct Report {
  RunConfig config;
  std::vector<SuiteResult> suites;
  bool pass = true;
};

/// Floats are serialized with 17 significant digits and keys in a fixed
/// order, so identical configs produce byte-identical reports.
std::string format_double(double v);
std::string to_json(const Report& report);
std::string to_csv(const Report& report);

/// Minimal ordered JSON object builder for the point-query subcommands.
class JsonWriter {
 public:
  void field(const std::string& key, double v);
  void field(const std::string& key, const std::string& v);
  void field(const std::string& key, bool v);
  void field(const std::string& key, std::int64_t v);
  void field_complex(const std::string& key, Complex v);
  void field_raw(const std::string& key, const std::string& raw);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace ghpkerr
