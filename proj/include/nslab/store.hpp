// Append-only JSON-lines witness store. Each line holds an id, a CheckReport,
// the configuration it was computed under and a full invariant record.

#ifndef NSLAB_STORE_HPP_
#define NSLAB_STORE_HPP_

#include <chrono>
#include <cstddef>
#include <ctime>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "lab.hpp"
#include "record.hpp"
#include "report.hpp"

namespace nslab {

inline std::string utc_timestamp() {
  auto const  now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm     tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline Json config_json(Config const& cfg) {
  Json j;
  j["characteristics"] = cfg.characteristics;
  j["caps"]            = {{"factorizations", cfg.caps.factorizations},
                          {"rf_product", cfg.caps.rf_product},
                          {"faces", cfg.caps.faces}};
  if (cfg.caps.b1g_degree) {
    j["caps"]["b1g_degree"] = *cfg.caps.b1g_degree;
  }
  return j;
}

inline Config config_from_json(Json const& j) {
  Config cfg;
  cfg.characteristics = j.at("characteristics").get<std::vector<int>>();
  auto const& c       = j.at("caps");
  cfg.caps.factorizations = c.at("factorizations").get<std::size_t>();
  cfg.caps.rf_product     = c.at("rf_product").get<std::size_t>();
  cfg.caps.faces          = c.at("faces").get<std::size_t>();
  if (c.contains("b1g_degree")) {
    cfg.caps.b1g_degree = c.at("b1g_degree").get<Int>();
  }
  cfg.validate();
  return cfg;
}

struct StoredWitness {
  std::size_t id = 0;
  CheckReport report;
  Json        config;
  Json        record;

  Json to_json() const {
    return {{"id", id}, {"report", report.to_json()}, {"config", config},
            {"record", record}};
  }
};

class WitnessStore {
 public:
  explicit WitnessStore(std::string path) : path_(std::move(path)) {
    next_id_ = load(path_).size();
  }

  std::string const& path() const noexcept {
    return path_;
  }

  // Ids are line numbers, so appends from concurrent callers are serialized.
  std::size_t append(CheckReport const& report, Config const& cfg) {
    auto const S = NumericalSemigroup::from_generators(report.gens);
    StoredWitness w{0, report, config_json(cfg), invariant_record(S, cfg)};
    std::lock_guard lock(mutex_);
    w.id = next_id_;
    std::ofstream out(path_, std::ios::app);
    if (!out) {
      throw InvalidInput("witness store: cannot open " + path_);
    }
    out << w.to_json().dump() << '\n';
    if (!out) {
      throw InvalidInput("witness store: write to " + path_ + " failed");
    }
    return next_id_++;
  }

  static std::vector<StoredWitness> load(std::string const& path) {
    std::vector<StoredWitness> out;
    std::ifstream              in(path);
    std::string                line;
    while (std::getline(in, line)) {
      if (line.empty()) {
        continue;
      }
      Json j;
      try {
        j = Json::parse(line);
        out.push_back(StoredWitness{j.at("id").get<std::size_t>(),
                                    CheckReport::from_json(j.at("report")),
                                    j.at("config"), j.at("record")});
      } catch (Json::exception const& e) {
        throw InvalidInput("witness store " + path + ", line "
                           + std::to_string(out.size() + 1) + ": " + e.what());
      }
    }
    return out;
  }

  static StoredWitness find(std::string const& path, std::size_t id) {
    for (auto& w : load(path)) {
      if (w.id == id) {
        return std::move(w);
      }
    }
    throw InvalidInput("witness store " + path + ": no witness with id "
                       + std::to_string(id));
  }

 private:
  std::string path_;
  std::size_t next_id_ = 0;
  std::mutex  mutex_;
};

struct ReplayResult {
  StoredWitness            stored;
  Json                     record;
  CheckReport              report;
  std::vector<std::string> record_diff;
  bool                     verdict_matches = true;

  bool identical() const noexcept {
    return record_diff.empty() && verdict_matches;
  }
};

// Recomputes the record and, for registered checks and suite predicates,
// the report.
inline ReplayResult replay(StoredWitness const& w) {
  auto const cfg = config_from_json(w.config);
  auto const S   = NumericalSemigroup::from_generators(w.report.gens);
  ReplayResult r{w, invariant_record(S, cfg), w.report, {}, true};
  r.record_diff = record_diff(w.record, r.record);
  auto const& reg = check_registry();
  std::optional<CheckReport> again;
  if (auto it = reg.find(w.report.check); it != reg.end()) {
    again = it->second(S, cfg);
  } else {
    for (auto const& suite : suites()) {
      if (suite.id == w.report.check) {
        again = suite.check(S, cfg);
      }
    }
  }
  if (again) {
    r.report          = *again;
    r.verdict_matches = again->verdict == w.report.verdict
                        && again->data == w.report.data;
  }
  return r;
}

}  // namespace nslab

#endif  // NSLAB_STORE_HPP_
