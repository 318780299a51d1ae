#include "rpf/bench/batch.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rpf::bench {

namespace {

// Shortest decimal that round-trips binary64, so parsing the CSV back gives
// bit-identical values.
std::string fmtExact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = std::strtod(buf, nullptr);
  if (back == v) {
    for (int prec = 1; prec < 17; ++prec) {
      char shorter[32];
      std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
      if (std::strtod(shorter, nullptr) == v) return shorter;
    }
  }
  return buf;
}

std::ofstream openOut(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

}  // namespace

BatchReport runBatch(const std::vector<sim::Scenario>& scenarios,
                     const std::vector<MethodSpec>& methods, const BatchOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  BatchReport report;
  report.seedCount = opt.seedCount;
  for (const auto& scenario : scenarios) {
    for (const auto& method : methods) {
      MethodResult res;
      res.scenario = scenario.name;
      res.method = method.id;
      res.records.reserve(opt.seedCount);
      for (int i = 0; i < opt.seedCount; ++i) {
        EpisodeRecord rec = runEpisode(scenario, method, scenario.seed + i, opt.run);
        if (opt.onEpisode) opt.onEpisode(rec);
        rec.steps.clear();
        rec.steps.shrink_to_fit();
        rec.beliefRows.clear();
        rec.beliefRows.shrink_to_fit();
        rec.dynamicRows.clear();
        rec.dynamicRows.shrink_to_fit();
        res.records.push_back(std::move(rec));
      }
      res.agg = aggregate(res.records);
      report.results.push_back(std::move(res));
    }
  }
  report.wallClockSec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string reportJson(const BatchReport& report) {
  nlohmann::ordered_json j;
  j["seed_count"] = report.seedCount;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json e;
    e["scenario"] = r.scenario;
    e["method"] = r.method;
    e["episodes"] = r.agg.count;
    e["successes"] = r.agg.successes;
    e["sr"] = r.agg.sr;
    e["spl"] = r.agg.spl;
    e["edtot"] = r.agg.edtot;
    j["results"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

void writeReportJson(const BatchReport& report, const std::string& path) {
  openOut(path) << reportJson(report);
}

void writeEpisodesCsv(const BatchReport& report, const std::string& path) {
  auto out = openOut(path);
  out << "scenario,method,seed,success,t_first_loss,t_refind,path_len,shortest_len,edtot_mean\n";
  for (const auto& r : report.results) {
    for (const auto& e : r.records) {
      out << e.scenario << ',' << e.method << ',' << e.seed << ',' << (e.success ? 1 : 0)
          << ',' << fmtExact(e.tFirstLoss) << ',' << fmtExact(e.tRefind) << ','
          << fmtExact(e.pathLength) << ',' << fmtExact(e.shortestLength) << ','
          << fmtExact(e.edtotMean) << '\n';
    }
  }
}

void writeTrajectoryCsv(const EpisodeRecord& rec, const std::string& path) {
  auto out = openOut(path);
  out << "t,robot_x,robot_y,target_x,target_y,mode,dist\n";
  char buf[160];
  for (const auto& s : rec.steps) {
    std::snprintf(buf, sizeof(buf), "%.3f,%.4f,%.4f,%.4f,%.4f,", s.t, s.robot.x(),
                  s.robot.y(), s.target.x(), s.target.y());
    out << buf << s.mode << ',';
    std::snprintf(buf, sizeof(buf), "%.4f\n", s.dist);
    out << buf;
  }
}

void writeEpisodeJson(const EpisodeRecord& rec, const std::string& path) {
  nlohmann::ordered_json j;
  j["scenario"] = rec.scenario;
  j["method"] = rec.method;
  j["seed"] = rec.seed;
  j["time_limit"] = rec.timeLimit;
  j["timestep"] = rec.timestep;
  j["success"] = rec.success;
  j["ever_lost"] = rec.everLost;
  j["t_first_loss"] = rec.tFirstLoss;
  j["t_refind"] = rec.tRefind;
  j["path_len"] = rec.pathLength;
  j["shortest_len"] = rec.shortestLength;
  j["edtot_mean"] = rec.edtotMean;
  j["mode_timeline"] = nlohmann::ordered_json::array();
  for (const auto& [t, mode] : rec.modeTimeline)
    j["mode_timeline"].push_back({t, mode});
  openOut(path) << j.dump(2) << "\n";
}

void writeBeliefDebugCsv(const EpisodeRecord& rec, const std::string& path) {
  auto out = openOut(path);
  out << "t,id,x,y,v_g,v_c,v_e,v_p,eta,W,chosen\n";
  char buf[256];
  for (const auto& r : rec.beliefRows) {
    std::snprintf(buf, sizeof(buf), "%.3f,%d,%.4f,%.4f,%.6f,%.6f,%.6f,%.6f,%.1f,%.6f,%d\n",
                  r.t, r.candidateId, r.position.x(), r.position.y(), r.vG, r.vC, r.vE,
                  r.vP, r.eta, r.weight, r.chosen ? 1 : 0);
    out << buf;
  }
}

void writeDynamicDebugCsv(const EpisodeRecord& rec, const std::string& path) {
  auto out = openOut(path);
  out << "t,strategy,C_star,v_occ_min,v_occ_max,goal_x,goal_y\n";
  char buf[256];
  for (const auto& r : rec.dynamicRows) {
    std::snprintf(buf, sizeof(buf), "%.3f,%s,%.6g,%.6g,%.6g,%.4f,%.4f\n", r.t,
                  r.strategy.c_str(), r.cStar, r.vOccMin, r.vOccMax, r.goal.x(),
                  r.goal.y());
    out << buf;
  }
}

std::vector<MethodResult> readEpisodesCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty episodes file: " + path);

  std::vector<MethodResult> groups;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> f;
    while (std::getline(ss, field, ',')) f.push_back(field);
    if (f.size() != 9) throw std::runtime_error("malformed episodes row: " + line);

    EpisodeRecord e;
    e.scenario = f[0];
    e.method = f[1];
    e.seed = std::stoull(f[2]);
    e.success = f[3] == "1";
    e.tFirstLoss = std::strtod(f[4].c_str(), nullptr);
    e.tRefind = std::strtod(f[5].c_str(), nullptr);
    e.pathLength = std::strtod(f[6].c_str(), nullptr);
    e.shortestLength = std::strtod(f[7].c_str(), nullptr);
    e.edtotMean = std::strtod(f[8].c_str(), nullptr);
    e.everLost = e.tFirstLoss >= 0;

    if (groups.empty() || groups.back().scenario != e.scenario ||
        groups.back().method != e.method) {
      groups.push_back({e.scenario, e.method, {}, {}});
    }
    groups.back().records.push_back(std::move(e));
  }
  for (auto& g : groups) g.agg = aggregate(g.records);
  return groups;
}

}  // namespace rpf::bench
