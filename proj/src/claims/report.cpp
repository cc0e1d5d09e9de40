#include "wzlab/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace wzlab {
namespace {

using Json = nlohmann::ordered_json;

std::string residue_text(const std::optional<Residue>& r) { return r ? r->str() : ""; }

Json verdict_json(const Verdict& v, const Report& report, const ReportFormatOptions& options) {
  Json row;
  row["claim"] = v.claim_id;
  row["prime"] = v.prime;
  row["exponent"] = v.exponent;
  row["lhs"] = v.lhs ? Json(v.lhs->value()) : Json(nullptr);
  row["rhs"] = v.rhs ? Json(v.rhs->value()) : Json(nullptr);
  row["holds"] = v.holds;
  if (report.mode == PathMode::CrossCheck) {
    row["exact_lhs"] = v.exact_lhs ? Json(v.exact_lhs->value()) : Json(nullptr);
    row["paths_agree"] = v.paths_agree;
  }
  if (!v.note.empty()) row["note"] = v.note;
  if (!v.error.empty()) row["error"] = v.error;
  if (options.include_timing) {
    row["micros"] = v.elapsed.count();
    if (report.mode == PathMode::CrossCheck) {
      row["fast_micros"] = v.fast_elapsed.count();
      row["exact_micros"] = v.exact_elapsed.count();
    }
  }
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_json(const Report& report, const ReportFormatOptions& options) {
  Json doc;
  doc["schema"] = "wzlab.report/1";
  Json run;
  run["command"] = report.command;
  run["claims"] = report.claim_ids;
  run["primes"] = {{"lo", report.lo}, {"hi", report.hi}, {"count", report.primes.size()}};
  run["exponent_override"] = report.exponent ? Json(*report.exponent) : Json(nullptr);
  run["path"] = std::string(to_string(report.mode));
  doc["run"] = run;
  Json claims = Json::array();
  for (const auto& c : report.claims) {
    claims.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"exponent", c.exponent},
                      {"passed", c.passed},
                      {"failed", c.failed},
                      {"skipped", c.skipped}});
  }
  doc["claims"] = claims;
  Json rows = Json::array();
  for (const auto& v : report.verdicts) rows.push_back(verdict_json(v, report, options));
  doc["verdicts"] = rows;
  doc["notices"] = report.notices;
  doc["summary"] = {{"verdicts", report.verdicts.size()}, {"failures", report.failures()}, {"all_passed", report.all_passed()}};
  return doc.dump(2) + "\n";
}

std::string report_csv(const Report& report, const ReportFormatOptions& options) {
  const bool cross = report.mode == PathMode::CrossCheck;
  std::ostringstream os;
  os << "claim,prime,exponent,lhs,rhs,holds";
  if (cross) os << ",exact_lhs,paths_agree";
  os << ",note,error";
  if (options.include_timing) os << (cross ? ",micros,fast_micros,exact_micros" : ",micros");
  os << '\n';
  for (const auto& v : report.verdicts) {
    os << v.claim_id << ',' << v.prime << ',' << v.exponent << ',' << residue_text(v.lhs) << ','
       << residue_text(v.rhs) << ',' << (v.holds ? "true" : "false");
    if (cross) os << ',' << residue_text(v.exact_lhs) << ',' << (v.paths_agree ? "true" : "false");
    os << ',' << csv_field(v.note) << ',' << csv_field(v.error);
    if (options.include_timing) {
      os << ',' << v.elapsed.count();
      if (cross) os << ',' << v.fast_elapsed.count() << ',' << v.exact_elapsed.count();
    }
    os << '\n';
  }
  return os.str();
}

std::string report_human(const Report& report, const ReportFormatOptions& options) {
  std::ostringstream os;
  os << report.command << ": " << report.primes.size() << " prime(s) in [" << report.lo << ", " << report.hi
     << "], path " << to_string(report.mode);
  if (report.exponent) os << ", exponent override " << *report.exponent;
  os << "\n\n";
  const char* label = report.command == "proof-steps" ? "step" : "claim";
  std::size_t width = 5;
  for (const auto& c : report.claims) width = std::max(width, c.id.size());
  os << std::left << std::setw(static_cast<int>(width)) << label << "  pass  fail  skip  result  statement\n";
  for (const auto& c : report.claims) {
    os << std::left << std::setw(static_cast<int>(width)) << c.id << std::right << "  " << std::setw(4) << c.passed
       << "  " << std::setw(4) << c.failed << "  " << std::setw(4) << c.skipped << "  "
       << (c.failed == 0 ? "PASS  " : "FAIL  ") << "  " << c.statement << '\n';
  }
  const bool all = options.include_timing || options.list_verdicts;
  bool header = false;
  for (const auto& v : report.verdicts) {
    if (v.ok() && !all) continue;
    if (!header) {
      os << '\n' << (all ? "verdicts:\n" : "failures:\n");
      header = true;
    }
    os << "  " << v.claim_id << " p=" << v.prime << " mod p^" << v.exponent << ": lhs=" << residue_text(v.lhs)
       << " rhs=" << residue_text(v.rhs);
    if (v.exact_lhs) os << " exact_lhs=" << v.exact_lhs->str() << (v.paths_agree ? "" : " PATHS DISAGREE");
    if (!v.note.empty()) os << " [" << v.note << "]";
    if (!v.error.empty()) os << " error: " << v.error;
    if (options.include_timing) os << " (" << v.elapsed.count() << " us)";
    os << (v.ok() ? "" : "  <-- FAIL") << '\n';
  }
  for (const auto& n : report.notices) os << "note: " << n << '\n';
  os << '\n' << report.verdicts.size() << " verdict(s), " << report.failures() << " failure(s)\n";
  return os.str();
}

}  // namespace wzlab
