#include "balt/report.hpp"

#include <json.hpp>

namespace balt::report {

const char* status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kFlag: return "flag";
  }
  return "?";
}

Value Value::of(const num::Rational& r, unsigned digits) {
  return {r.to_decimal(digits), r.to_fraction()};
}

Value Value::of(const num::RatInterval& i, unsigned digits) {
  return {i.to_decimal(digits), i.to_fraction()};
}

Value Value::of(const num::BigInt& n) {
  return {n.get_str(), n.get_str()};
}

Value Value::text(std::string s) { return {s, s}; }

Row& Row::with(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
  return *this;
}

Row& Row::with(std::string key, unsigned long value) {
  params.emplace_back(std::move(key), std::to_string(value));
  return *this;
}

std::string to_jsonl(const Row& row) {
  nlohmann::ordered_json j;
  j["check"] = row.check;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : row.params) p[k] = v;
  j["params"] = p;
  j["status"] = status_name(row.status);
  if (row.lhs) {
    j["lhs"] = row.lhs->decimal;
    j["lhs_exact"] = row.lhs->exact;
  }
  if (row.rhs) {
    j["rhs"] = row.rhs->decimal;
    j["rhs_exact"] = row.rhs->exact;
  }
  if (!row.note.empty()) j["note"] = row.note;
  return j.dump();
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string csv_header() { return "check,status,params,lhs,lhs_exact,rhs,rhs_exact,note"; }

std::string to_csv(const Row& row) {
  std::string params;
  for (const auto& [k, v] : row.params) {
    if (!params.empty()) params += ' ';
    params += k + "=" + v;
  }
  std::string out = csv_escape(row.check);
  out += ',';
  out += status_name(row.status);
  out += ',';
  out += csv_escape(params);
  out += ',';
  out += row.lhs ? csv_escape(row.lhs->decimal) : "";
  out += ',';
  out += row.lhs ? csv_escape(row.lhs->exact) : "";
  out += ',';
  out += row.rhs ? csv_escape(row.rhs->decimal) : "";
  out += ',';
  out += row.rhs ? csv_escape(row.rhs->exact) : "";
  out += ',';
  out += csv_escape(row.note);
  return out;
}

int aggregate_outcome(std::span<const Row> rows) {
  bool flag = false;
  for (const Row& r : rows) {
    if (r.status == Status::kFail) return 1;
    if (r.status == Status::kFlag) flag = true;
  }
  return flag ? 3 : 0;
}

}  // namespace balt::report
