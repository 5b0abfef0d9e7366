#include "sjack/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>

namespace sjack {

namespace {

Json int_poly_to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p) arr.push_back(c.get_str());
  return arr;
}

IntPoly int_poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of integer strings");
  IntPoly p;
  for (const auto& c : j) {
    if (!c.is_string()) throw std::invalid_argument("expected an integer string");
    BigRat q = parse_rational(c.get<std::string>());
    if (q.get_den() != 1) throw std::invalid_argument("expected an integer coefficient");
    p.push_back(q.get_num());
  }
  return p;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\";\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const AlphaLaurent& l) {
  Json j;
  j["min_exp"] = l.min_exp;
  Json coeffs = Json::array();
  for (const auto& c : l.coeffs) coeffs.push_back(c.get_str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

AlphaLaurent laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("min_exp") || !j.contains("coeffs") || !j["min_exp"].is_number_integer() ||
      !j["coeffs"].is_array())
    throw std::invalid_argument("malformed Laurent polynomial");
  AlphaLaurent l;
  l.min_exp = j["min_exp"].get<int>();
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("Laurent coefficient must be a string");
    l.coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return l;
}

Json to_json(const AlphaRational& r) {
  Json j;
  j["num"] = int_poly_to_json(r.num());
  j["den"] = int_poly_to_json(r.den());
  return j;
}

AlphaRational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw std::invalid_argument("malformed rational");
  return AlphaRational::from_int_polys(int_poly_from_json(j["num"]), int_poly_from_json(j["den"]));
}

Json to_json(const ConstantRecord& rec) {
  Json j;
  j["mu"] = rec.key.mu.to_string();
  j["nu"] = rec.key.nu.to_string();
  j["lambda"] = rec.key.lam.to_string();
  j["c"] = to_json(rec.c);
  j["g"] = to_json(rec.g);
  j["g_laurent"] = rec.g_laurent ? to_json(*rec.g_laurent) : Json(nullptr);
  j["nonneg_integer"] = rec.nonneg_integer ? Json(*rec.nonneg_integer) : Json(nullptr);
  j["shift_poly_ok"] = alpha_shift_poly_check(rec);
  return j;
}

Json report_to_json(const ReportMetadata& meta, const VerifyResult& result) {
  Json j;
  Json m;
  m["tool"] = "shifted-jack";
  m["version"] = kToolVersion;
  m["max_mu"] = meta.max_mu;
  m["max_nu"] = meta.max_nu;
  Json samples = Json::array();
  for (const auto& a : meta.alpha_samples) samples.push_back(a.get_str());
  m["alpha_samples"] = std::move(samples);
  m["timestamp"] = meta.timestamp ? Json(*meta.timestamp) : Json(nullptr);
  m["record_count"] = result.records.size();
  m["failure_count"] = result.failures.size();
  j["metadata"] = std::move(m);

  Json records = Json::array();
  for (const auto& rec : result.records) records.push_back(to_json(rec));
  j["records"] = std::move(records);

  Json failures = Json::array();
  for (const auto& f : result.failures) {
    Json fj;
    fj["mu"] = f.key.mu.to_string();
    fj["nu"] = f.key.nu.to_string();
    fj["lambda"] = f.key.lam.to_string();
    fj["reason"] = to_string(f.reason);
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  return j;
}

std::string report_to_csv(const VerifyResult& result) {
  std::ostringstream os;
  os << "mu,nu,lambda,g_min_exp,g_coeffs,is_laurent,nonneg_integer,shift_poly_ok\n";
  for (const auto& rec : result.records) {
    os << csv_quote(rec.key.mu.to_string()) << ',' << csv_quote(rec.key.nu.to_string()) << ','
       << csv_quote(rec.key.lam.to_string()) << ',';
    if (rec.g_laurent) {
      std::string coeffs;
      for (std::size_t k = 0; k < rec.g_laurent->coeffs.size(); ++k) {
        if (k) coeffs += ';';
        coeffs += rec.g_laurent->coeffs[k].get_str();
      }
      os << rec.g_laurent->min_exp << ',' << csv_quote(coeffs) << ",true,"
         << (*rec.nonneg_integer ? "true" : "false");
    } else {
      os << ",,false,";
    }
    os << ',' << (alpha_shift_poly_check(rec) ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace sjack
