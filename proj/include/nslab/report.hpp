// Outcome of one check on one semigroup.

#ifndef NSLAB_REPORT_HPP_
#define NSLAB_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "semigroup.hpp"

namespace nslab {

using Json = nlohmann::json;

enum class Verdict { pass, fail, inconclusive };

inline char const* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

inline Verdict verdict_from_string(std::string const& s) {
  if (s == "pass") {
    return Verdict::pass;
  }
  if (s == "fail") {
    return Verdict::fail;
  }
  if (s == "inconclusive") {
    return Verdict::inconclusive;
  }
  throw InvalidInput("unknown verdict: " + s);
}

// Worst of two verdicts: fail beats inconclusive beats pass.
inline Verdict combine(Verdict a, Verdict b) noexcept {
  if (a == Verdict::fail || b == Verdict::fail) {
    return Verdict::fail;
  }
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) {
    return Verdict::inconclusive;
  }
  return Verdict::pass;
}

struct CheckReport {
  std::string                check;
  std::vector<Int>           gens;
  Verdict                    verdict = Verdict::pass;
  Json                       data    = Json::object();
  std::optional<std::string> timestamp;

  Json to_json() const {
    Json j;
    j["check"]   = check;
    j["gens"]    = gens;
    j["verdict"] = to_string(verdict);
    j["data"]    = data;
    if (timestamp) {
      j["timestamp"] = *timestamp;
    }
    return j;
  }

  static CheckReport from_json(Json const& j) {
    CheckReport r;
    r.check   = j.at("check").get<std::string>();
    r.gens    = j.at("gens").get<std::vector<Int>>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.data    = j.value("data", Json::object());
    if (j.contains("timestamp")) {
      r.timestamp = j.at("timestamp").get<std::string>();
    }
    return r;
  }
};

inline CheckReport make_report(std::string               check,
                               NumericalSemigroup const& S,
                               Verdict                   verdict,
                               Json                      data = Json::object()) {
  return CheckReport{std::move(check), S.generators(), verdict,
                     std::move(data), std::nullopt};
}

}  // namespace nslab

#endif  // NSLAB_REPORT_HPP_
