#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "padichyp/verify.hpp"

namespace padichyp {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_json(std::span<const ReportEntry> entries, std::ostream& out) {
  for (const ReportEntry& e : entries) {
    nlohmann::ordered_json j;
    j["suite"] = e.suite;
    j["p"] = e.p;
    j["case"] = e.case_id;
    j["lhs"] = e.lhs;
    j["rhs"] = e.rhs;
    j["modulus"] = e.modulus;
    j["status"] = e.status_text();
    out << j.dump() << '\n';
  }
}

void emit_csv(std::span<const ReportEntry> entries, std::ostream& out) {
  out << "suite,p,case,lhs,rhs,modulus,status\n";
  for (const ReportEntry& e : entries) {
    out << csv_field(e.suite) << ',' << e.p << ',' << csv_field(e.case_id) << ','
        << csv_field(e.lhs) << ',' << csv_field(e.rhs) << ',' << csv_field(e.modulus) << ','
        << csv_field(e.status_text()) << '\n';
  }
}

void emit_summary(std::span<const ReportEntry> entries, std::ostream& out) {
  std::vector<std::string> order;
  std::map<std::string, Counts> per_suite;
  for (const ReportEntry& e : entries) {
    auto [it, inserted] = per_suite.try_emplace(e.suite);
    if (inserted) order.push_back(e.suite);
    Counts& c = it->second;
    switch (e.status) {
      case Status::Pass: ++c.pass; break;
      case Status::Fail: ++c.fail; break;
      case Status::Skip: ++c.skip; break;
    }
  }
  auto line = [&out](const std::string& name, const Counts& c) {
    out << name << ": pass=" << c.pass << " fail=" << c.fail << " skip=" << c.skip << '\n';
  };
  for (const std::string& s : order) line(s, per_suite[s]);
  line("total", count_entries(entries));
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "json" || name == "json-lines") return ReportFormat::JsonLines;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "summary") return ReportFormat::Summary;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

void emit_report(std::span<const ReportEntry> entries, ReportFormat format, std::ostream& out) {
  switch (format) {
    case ReportFormat::JsonLines: emit_json(entries, out); break;
    case ReportFormat::Csv: emit_csv(entries, out); break;
    case ReportFormat::Summary: emit_summary(entries, out); break;
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing report");
}

}  // namespace padichyp
