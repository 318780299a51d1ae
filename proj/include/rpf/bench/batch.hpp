#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rpf/bench/episode_runner.hpp"
#include "rpf/bench/metrics.hpp"

namespace rpf::bench {

struct BatchOptions {
  int seedCount = 100;
  RunOptions run;
  // Called with each finished episode before the bulky fields are dropped;
  // the stored records keep scalars and the mode timeline only.
  std::function<void(const EpisodeRecord&)> onEpisode;
};

struct MethodResult {
  std::string scenario;
  std::string method;
  Aggregate agg;
  std::vector<EpisodeRecord> records;
};

struct BatchReport {
  int seedCount = 0;
  std::vector<MethodResult> results;
  double wallClockSec = 0.0;  // console only, never serialized
};

// Runs every (scenario, method) pair with seeds scenario.seed + i. Output is a
// pure function of the inputs; two identical invocations serialize to the same
// bytes.
BatchReport runBatch(const std::vector<sim::Scenario>& scenarios,
                     const std::vector<MethodSpec>& methods, const BatchOptions& opt);

std::string reportJson(const BatchReport& report);
void writeReportJson(const BatchReport& report, const std::string& path);
void writeEpisodesCsv(const BatchReport& report, const std::string& path);
void writeTrajectoryCsv(const EpisodeRecord& rec, const std::string& path);
void writeEpisodeJson(const EpisodeRecord& rec, const std::string& path);
void writeBeliefDebugCsv(const EpisodeRecord& rec, const std::string& path);
void writeDynamicDebugCsv(const EpisodeRecord& rec, const std::string& path);

// Rebuilds per-(scenario, method) groups from an episodes.csv written by
// writeEpisodesCsv; aggregates recomputed from the parsed rows match the
// original report exactly.
std::vector<MethodResult> readEpisodesCsv(const std::string& path);

}  // namespace rpf::bench
