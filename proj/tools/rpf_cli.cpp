#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rpf/bench/batch.hpp"

namespace fs = std::filesystem;
using namespace rpf;

namespace {

std::string episodeStem(const bench::EpisodeRecord& rec) {
  return rec.scenario + "_" + rec.method + "_" + std::to_string(rec.seed);
}

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmdRun(const std::string& scenarioPath, const std::string& methodId, int64_t seedArg,
           const std::string& outDir, bool debugFields, bool pgm) {
  const sim::Scenario scenario = sim::loadScenario(scenarioPath);
  const bench::MethodSpec method = bench::parseMethod(methodId);
  const uint64_t seed = seedArg < 0 ? scenario.seed : static_cast<uint64_t>(seedArg);

  bench::RunOptions opt;
  opt.keepSteps = true;
  opt.keepDebug = debugFields;
  mapping::OccupancyGrid finalGrid;
  if (pgm) opt.finalGrid = &finalGrid;

  const bench::EpisodeRecord rec = bench::runEpisode(scenario, method, seed, opt);

  fs::create_directories(outDir);
  const std::string stem = (fs::path(outDir) / episodeStem(rec)).string();
  bench::writeEpisodeJson(rec, stem + ".json");
  bench::writeTrajectoryCsv(rec, stem + "_trajectory.csv");
  if (debugFields) {
    bench::writeBeliefDebugCsv(rec, stem + "_belief.csv");
    bench::writeDynamicDebugCsv(rec, stem + "_dynamic.csv");
  }
  if (pgm) finalGrid.writePgm(stem + "_map.pgm");

  std::printf("%s %s seed=%llu success=%d t_first_loss=%.1f t_refind=%.1f edtot=%.2f\n",
              rec.scenario.c_str(), rec.method.c_str(),
              static_cast<unsigned long long>(rec.seed), rec.success ? 1 : 0,
              rec.tFirstLoss, rec.tRefind, rec.edtotMean);
  return 0;
}

int cmdBatch(const std::string& scenarioDir, const std::string& methodList, int seeds,
             const std::string& outDir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(scenarioDir)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::invalid_argument("no scenario files in " + scenarioDir);

  std::vector<sim::Scenario> scenarios;
  for (const auto& f : files) scenarios.push_back(sim::loadScenario(f.string()));

  std::vector<bench::MethodSpec> methods;
  for (const auto& id : splitList(methodList)) methods.push_back(bench::parseMethod(id));
  if (methods.empty()) throw std::invalid_argument("no methods given");

  fs::create_directories(outDir);
  const fs::path trajDir = fs::path(outDir) / "trajectories";
  fs::create_directories(trajDir);

  bench::BatchOptions opt;
  opt.seedCount = seeds;
  opt.run.keepSteps = true;
  opt.onEpisode = [&](const bench::EpisodeRecord& rec) {
    bench::writeTrajectoryCsv(rec, (trajDir / (episodeStem(rec) + ".csv")).string());
  };

  const bench::BatchReport report = bench::runBatch(scenarios, methods, opt);
  bench::writeReportJson(report, (fs::path(outDir) / "report.json").string());
  bench::writeEpisodesCsv(report, (fs::path(outDir) / "episodes.csv").string());

  for (const auto& r : report.results)
    std::printf("%-12s %-28s SR %6.1f%%  SPL %6.1f%%  EDTOT %6.2f m\n", r.scenario.c_str(),
                r.method.c_str(), r.agg.sr, r.agg.spl, r.agg.edtot);
  std::printf("wall clock: %.1f s\n", report.wallClockSec);
  return 0;
}

int cmdReport(const std::string& inDir) {
  const auto groups = bench::readEpisodesCsv((fs::path(inDir) / "episodes.csv").string());
  bench::BatchReport report;
  report.seedCount = groups.empty() ? 0 : static_cast<int>(groups.front().records.size());
  report.results = groups;
  const std::string text = bench::reportJson(report);
  std::fputs(text.c_str(), stdout);

  const fs::path existing = fs::path(inDir) / "report.json";
  if (fs::exists(existing)) {
    std::ifstream in(existing);
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() != text) {
      std::fprintf(stderr, "recomputed aggregates differ from %s\n", existing.string().c_str());
      return 2;
    }
    std::fprintf(stderr, "matches %s\n", existing.string().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"person-following search benchmark"};
  app.require_subcommand(1);

  std::string scenarioPath, methodId, outDir = ".", scenarioDir, methodList, inDir;
  int64_t seed = -1;
  int seeds = 100;
  bool debugFields = false, pgm = false;

  auto* run = app.add_subcommand("run", "run one episode");
  run->add_option("--scenario", scenarioPath, "scenario JSON file")->required();
  run->add_option("--method", methodId, "search method identifier")->required();
  run->add_option("--seed", seed, "episode seed (default: scenario seed)");
  run->add_option("--out", outDir, "output directory");
  run->add_flag("--debug-fields", debugFields, "dump planner internals as CSV");
  run->add_flag("--pgm", pgm, "dump the final mapped grid as PGM");

  auto* batch = app.add_subcommand("batch", "run scenario x method x seed grid");
  batch->add_option("--scenarios", scenarioDir, "directory of scenario JSON files")->required();
  batch->add_option("--methods", methodList, "comma-separated method identifiers")->required();
  batch->add_option("--seeds", seeds, "episodes per (scenario, method)");
  batch->add_option("--out", outDir, "output directory")->required();

  auto* rep = app.add_subcommand("report", "recompute aggregates from episodes.csv");
  rep->add_option("--in", inDir, "directory holding episodes.csv")->required();

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmdRun(scenarioPath, methodId, seed, outDir, debugFields, pgm);
    if (batch->parsed()) return cmdBatch(scenarioDir, methodList, seeds, outDir);
    if (rep->parsed()) return cmdReport(inDir);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
