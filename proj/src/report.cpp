#include "ghpkerr/report.hpp"

#include <cstdio>
#include <sstream>

namespace ghpkerr {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string point_json(const RVec4& p) {
  std::string out = "[";
  for (int i = 0; i < 4; ++i) {
    if (i) out += ", ";
    out += format_double(p[i]);
  }
  out += "]";
  return out;
}

std::string config_json(const RunConfig& c) {
  std::ostringstream os;
  os << "{\"mass\": " << format_double(c.mass) << ", \"spin\": " << format_double(c.spin)
     << ", \"s_doubled\": " << c.s_doubled << ", \"grid_r\": [";
  for (std::size_t i = 0; i < c.grid_r.size(); ++i) {
    if (i) os << ", ";
    os << format_double(c.grid_r[i]);
  }
  os << "], \"seed\": " << c.seed << ", \"tol_abs\": " << format_double(c.tol_abs)
     << ", \"tol_rel\": " << format_double(c.tol_rel) << "}";
  return os.str();
}

}  // namespace

std::string to_json(const Report& report) {
  std::ostringstream os;
  os << "{\n  \"config\": " << config_json(report.config) << ",\n  \"suites\": [\n";
  for (std::size_t i = 0; i < report.suites.size(); ++i) {
    const SuiteResult& s = report.suites[i];
    os << "    {\"name\": \"" << s.name << "\", \"max_abs\": " << format_double(s.max_abs)
       << ", \"max_rel\": " << format_double(s.max_rel)
       << ", \"pass\": " << (s.pass ? "true" : "false")
       << ", \"worst_point\": " << point_json(s.worst_point) << "}";
    if (i + 1 < report.suites.size()) os << ",";
    os << "\n";
  }
  os << "  ],\n  \"pass\": " << (report.pass ? "true" : "false") << "\n}\n";
  return os.str();
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  const RunConfig& c = report.config;
  os << "# mass=" << format_double(c.mass) << " spin=" << format_double(c.spin)
     << " s_doubled=" << c.s_doubled << " seed=" << c.seed
     << " tol_abs=" << format_double(c.tol_abs) << " tol_rel=" << format_double(c.tol_rel) << "\n";
  os << "name,max_abs,max_rel,pass,worst_0,worst_1,worst_2,worst_3\n";
  for (const SuiteResult& s : report.suites) {
    os << s.name << "," << format_double(s.max_abs) << "," << format_double(s.max_rel) << ","
       << (s.pass ? "true" : "false");
    for (int i = 0; i < 4; ++i) os << "," << format_double(s.worst_point[i]);
    os << "\n";
  }
  os << "overall,,," << (report.pass ? "true" : "false") << ",,,,\n";
  return os.str();
}

void JsonWriter::field(const std::string& key, double v) { fields_.emplace_back(key, format_double(v)); }
void JsonWriter::field(const std::string& key, const std::string& v) {
  fields_.emplace_back(key, "\"" + v + "\"");
}
void JsonWriter::field(const std::string& key, bool v) {
  fields_.emplace_back(key, v ? "true" : "false");
}
void JsonWriter::field(const std::string& key, std::int64_t v) {
  fields_.emplace_back(key, std::to_string(v));
}
void JsonWriter::field_complex(const std::string& key, Complex v) {
  fields_.emplace_back(key, "{\"re\": " + format_double(v.real()) + ", \"im\": " +
                                format_double(v.imag()) + "}");
}
void JsonWriter::field_raw(const std::string& key, const std::string& raw) {
  fields_.emplace_back(key, raw);
}

std::string JsonWriter::str() const {
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    out += "  \"" + fields_[i].first + "\": " + fields_[i].second;
    if (i + 1 < fields_.size()) out += ",";
    out += "\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ghpkerr
