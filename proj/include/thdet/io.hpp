#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "thdet/report.hpp"
#include "thdet/symbol.hpp"

namespace thdet {

using Json = nlohmann::json;

namespace detail {

inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace detail

/// Parse the symbol specification format
///   {"form": "coeffs"|"log-coeffs", "entries": {"<n>": [re, im], ...}}.
/// "log-coeffs" means the entries define log a and the symbol is exp of it.
inline FourierSymbol parse_symbol_spec(const Json& spec) {
  if (!spec.is_object() || !spec.contains("form") || !spec.contains("entries")) {
    throw SpecParseError("symbol spec needs \"form\" and \"entries\"");
  }
  const std::string form = spec.at("form").get<std::string>();
  if (form != "coeffs" && form != "log-coeffs") {
    throw SpecParseError("unknown symbol form: " + form);
  }
  FourierSymbol::CoeffMap entries;
  for (const auto& [key, value] : spec.at("entries").items()) {
    std::size_t pos = 0;
    int n = 0;
    try {
      n = std::stoi(key, &pos);
    } catch (const std::exception&) {
      throw SpecParseError("non-integer coefficient index: " + key);
    }
    if (pos != key.size()) {
      throw SpecParseError("non-integer coefficient index: " + key);
    }
    if (!value.is_array() || value.size() != 2) {
      throw SpecParseError("coefficient " + key + " must be [re, im]");
    }
    entries[n] = Complex(value[0].get<double>(), value[1].get<double>());
  }
  const FourierSymbol raw(std::move(entries));
  return form == "coeffs" ? raw : exp_symbol(raw);
}

inline FourierSymbol parse_symbol_spec(const std::string& text) {
  Json spec;
  try {
    spec = Json::parse(text);
  } catch (const Json::exception& e) {
    throw SpecParseError(std::string("malformed symbol JSON: ") + e.what());
  }
  return parse_symbol_spec(spec);
}

inline Json symbol_to_json(const FourierSymbol& a) {
  Json entries = Json::object();
  for (const auto& [n, v] : a.coeffs()) {
    entries[std::to_string(n)] = Json::array({v.real(), v.imag()});
  }
  return Json{{"form", "coeffs"}, {"entries", entries}};
}

// FNV-1a over the canonical coefficient table; used to tag CSV rows.
inline std::string symbol_hash(const FourierSymbol& a) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  const auto mix = [&h](const std::string& s) {
    for (const char ch : s) {
      h ^= static_cast<unsigned char>(ch);
      h *= 0x100000001B3ULL;
    }
  };
  for (const auto& [n, v] : a.coeffs()) {
    mix(std::to_string(n) + ":" + detail::fmt17(v.real()) + ":" +
        detail::fmt17(v.imag()) + ";");
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json logdet_to_json(const LogDet& d) {
  return Json{{"log_abs", d.zero_flag ? Json() : Json(d.log_abs)},
              {"phase", d.phase},
              {"zero_flag", d.zero_flag}};
}

inline LogDet logdet_from_json(const Json& j) {
  LogDet d;
  d.zero_flag = j.at("zero_flag").get<bool>();
  d.log_abs = j.at("log_abs").is_null()
                  ? -std::numeric_limits<double>::infinity()
                  : j.at("log_abs").get<double>();
  d.phase = j.at("phase").get<double>();
  return d;
}

inline Json report_to_json(const VerificationReport& r) {
  Json params{{"N", r.N},
              {"truncation", r.truncation},
              {"realization", r.realization},
              {"k", r.k},
              {"sign", r.sign},
              {"tolerance", r.tolerance},
              {"convention", r.convention},
              {"samples", r.samples},
              {"mc_stderr", r.mc_stderr},
              {"normalization", r.normalization}};
  return Json{{"command", r.command},
              {"lhs", logdet_to_json(r.lhs)},
              {"rhs", logdet_to_json(r.rhs)},
              {"rel_err", r.rel_err},
              {"passed", r.passed},
              {"notes", r.notes},
              {"params", params}};
}

inline VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.command = j.at("command").get<std::string>();
  r.lhs = logdet_from_json(j.at("lhs"));
  r.rhs = logdet_from_json(j.at("rhs"));
  r.rel_err = j.at("rel_err").get<double>();
  r.passed = j.at("passed").get<bool>();
  r.notes = j.at("notes").get<std::string>();
  const Json& p = j.at("params");
  r.N = p.at("N").get<int>();
  r.truncation = p.at("truncation").get<int>();
  r.realization = p.at("realization").get<std::string>();
  r.k = p.at("k").get<int>();
  r.sign = p.at("sign").get<int>();
  r.tolerance = p.at("tolerance").get<double>();
  r.convention = p.at("convention").get<std::string>();
  r.samples = p.at("samples").get<long long>();
  r.mc_stderr = p.at("mc_stderr").get<double>();
  r.normalization = p.at("normalization").get<std::string>();
  return r;
}

inline std::string report_csv_header() {
  return "command,symbol_hash,realization,k,sign,N,"
         "lhs_logabs,lhs_phase,rhs_logabs,rhs_phase,rel_err,passed";
}

inline std::string report_csv_row(const VerificationReport& r,
                                  const std::string& sym_hash) {
  std::ostringstream os;
  os << r.command << ',' << sym_hash << ',' << r.realization << ',' << r.k << ','
     << r.sign << ',' << r.N << ',' << detail::fmt17(r.lhs.log_abs) << ','
     << detail::fmt17(r.lhs.phase) << ',' << detail::fmt17(r.rhs.log_abs) << ','
     << detail::fmt17(r.rhs.phase) << ',' << detail::fmt17(r.rel_err) << ','
     << (r.passed ? "true" : "false");
  return os.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace thdet
