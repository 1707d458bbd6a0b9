/*
 * Copyright 2026 The Area Graph Localization Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <unistd.h>

#include <filesystem>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "areagraph/common/trajectory.h"
#include "areagraph/osmag/area_graph.h"
#include "areagraph/osmag/osm_document.h"
#include "gtest/gtest.h"
#include "tools/cli/commands.h"

namespace areagraph {
namespace cli {
namespace {

namespace fs = std::filesystem;

const std::string kData = AREAGRAPH_DATA_DIR;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           (std::string("cli_test_") + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliRun Cli(std::vector<std::string> args) {
    args.insert(args.begin(), "areagraph");
    std::ostringstream out;
    std::ostringstream err;
    CliRun run;
    run.code = RunCli(args, out, err);
    run.out = out.str();
    run.err = err.str();
    return run;
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // A scene file in the temp dir, pointing at a data map.
  std::string Scene(const std::string& map, const std::string& body) {
    const std::string path = Path("scene.ini");
    WriteTextFile(path, "[scene]\nmap = " + kData + "/maps/" + map + "\n" + body);
    return path;
  }

  fs::path dir_;
};

int CountOf(const std::string& text, const std::string& needle) {
  int count = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

TEST_F(CliTest, ValidateMap) {
  const CliRun ok = Cli({"validate-map", kData + "/maps/two_rooms.osm"});
  EXPECT_EQ(kExitOk, ok.code) << ok.out << ok.err;
  EXPECT_NE(std::string::npos, ok.out.find("valid"));

  const CliRun bowtie = Cli({"validate-map", kData + "/invalid/self_intersecting.osm"});
  EXPECT_NE(kExitOk, bowtie.code);
  EXPECT_NE(std::string::npos, bowtie.out.find("violation self_intersecting_polygon 1001"));

  const CliRun off = Cli({"validate-map", kData + "/invalid/passage_off_edge.osm"});
  EXPECT_NE(kExitOk, off.code);
  EXPECT_NE(std::string::npos, off.out.find("violation snap_tolerance 1003"));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(kExitUsage, Cli({}).code);
  EXPECT_EQ(kExitUsage, Cli({"track", "--bogus"}).code);
  EXPECT_EQ(kExitOk, Cli({"--help"}).code);

  const CliRun missing = Cli({"validate-map", Path("nope.osm")});
  EXPECT_EQ(kExitIo, missing.code);
  EXPECT_TRUE(std::regex_search(
      missing.err, std::regex(R"(^error code=io_error exit=3 message=".*nope\.osm.*"\n$)")))
      << missing.err;

  // Two scan sources.
  const CliRun two = Cli({"global-localize", "--map", kData + "/maps/two_rooms.osm", "--scene",
                       kData + "/scenes/static.ini", "--scan", kData + "/maps/two_rooms.osm"});
  EXPECT_EQ(kExitUsage, two.code);
  EXPECT_NE(std::string::npos, two.err.find("error code=invalid_argument exit=1"));

  // Prior outside the map.
  const CliRun lost = Cli({"global-localize", "--scene", kData + "/scenes/static.ini", "--prior",
                        "100,100"});
  EXPECT_EQ(kExitAlgorithm, lost.code);
  EXPECT_NE(std::string::npos, lost.err.find("error code=prior_out_of_map exit=2"));
}

TEST_F(CliTest, SimulateStaticPoseWritesOneScan) {
  const CliRun run = Cli({"simulate", "--scene", kData + "/scenes/static.ini", "--out", Path("sim")});
  ASSERT_EQ(kExitOk, run.code) << run.err;
  int scans = 0;
  for (const auto& entry : fs::directory_iterator(Path("sim/scans"))) scans += entry.is_regular_file();
  EXPECT_EQ(1, scans);
  EXPECT_EQ(1u, ReadTrajectoryFile(Path("sim/ground_truth.txt")).size());
  EXPECT_NO_THROW(osmag::LoadFloor(osmag::ReadOsmFile(Path("sim/map.osm")), 0));
}

TEST_F(CliTest, SimulateThirtySecondsIsReproducible) {
  const std::string scene = kData + "/scenes/corridor.ini";
  ASSERT_EQ(kExitOk, Cli({"simulate", "--scene", scene, "--out", Path("a")}).code);
  ASSERT_EQ(kExitOk, Cli({"simulate", "--scene", scene, "--out", Path("b")}).code);
  EXPECT_EQ(300u, ReadTrajectoryFile(Path("a/ground_truth.txt")).size());
  int scans = 0;
  for (const auto& entry : fs::directory_iterator(Path("a/scans"))) {
    ++scans;
    const std::string name = entry.path().filename().string();
    ASSERT_EQ(ReadTextFile(entry.path().string()), ReadTextFile(Path("b/scans/" + name)))
        << name;
  }
  EXPECT_EQ(300, scans);
  EXPECT_EQ(ReadTextFile(Path("a/ground_truth.txt")), ReadTextFile(Path("b/ground_truth.txt")));
  EXPECT_EQ(ReadTextFile(Path("a/map.osm")), ReadTextFile(Path("b/map.osm")));

  // Another seed changes the scans.
  ASSERT_EQ(kExitOk, Cli({"simulate", "--scene", scene, "--out", Path("c"), "--seed", "9"}).code);
  EXPECT_NE(ReadTextFile(Path("a/scans/scan_000000.txt")),
            ReadTextFile(Path("c/scans/scan_000000.txt")));
}

TEST_F(CliTest, GlobalLocalizeSimulatedFrame) {
  const std::string scene =
      Scene("room.osm", "seed = 4\n[clutter]\ndensity = 0.1\npath_clearance = 0.6\n"
                        "[trajectory]\nwaypoints = 4,3\n");
  const CliRun run = Cli({"global-localize", "--scene", scene, "--out", Path("g")});
  ASSERT_EQ(kExitOk, run.code) << run.err;
  std::smatch m;
  ASSERT_TRUE(std::regex_search(run.out, m, std::regex(R"(^pose (\S+) (\S+) (\S+) area)")));
  const Vec2 found(std::stod(m[1]), std::stod(m[2]));
  EXPECT_LT((found - Vec2(4., 3.)).norm(), 0.5);
  ASSERT_TRUE(std::regex_search(run.out, m, std::regex(R"(translation_error (\S+))")));
  EXPECT_LT(std::stod(m[1]), 0.5);
  // Header plus ten guesses after the "# top" line.
  const std::string top = run.out.substr(run.out.find("# top 10"));
  EXPECT_EQ(1 + 1 + 10 + 1, CountOf(top, "\n"));
  EXPECT_TRUE(fs::exists(Path("g/global.txt")));
}

TEST_F(CliTest, TrackLoopWritesTrajectoryAndReport) {
  const CliRun run = Cli({"track", "--scene", kData + "/scenes/office_loop.ini", "--out", Path("t")});
  ASSERT_EQ(kExitOk, run.code) << run.err;
  const auto trajectory = ReadTrajectoryFile(Path("t/trajectory.txt"));
  EXPECT_EQ(300u, trajectory.size());
  const std::string report = ReadTextFile(Path("t/report.txt"));
  EXPECT_NE(std::string::npos, report.find("frames 300 diverged_frames 0"));
  EXPECT_NE(std::string::npos, report.find("runtime_ms median="));
  std::smatch m;
  ASSERT_TRUE(std::regex_search(report, m, std::regex(R"(ate_rmse=(\S+) ate_max=(\S+))")));
  EXPECT_LE(std::stod(m[1]), std::stod(m[2]));
  EXPECT_LT(std::stod(m[1]), 0.2);

  // Same config, same trajectory.
  ASSERT_EQ(kExitOk,
            Cli({"track", "--scene", kData + "/scenes/office_loop.ini", "--out", Path("u")}).code);
  EXPECT_EQ(ReadTextFile(Path("t/trajectory.txt")), ReadTextFile(Path("u/trajectory.txt")));
}

TEST_F(CliTest, TrackScanFilesMatchesTrackingTheScene) {
  const std::string scene = kData + "/scenes/two_rooms_walk.ini";
  ASSERT_EQ(kExitOk, Cli({"simulate", "--scene", scene, "--out", Path("sim")}).code);
  const CliRun files = Cli({"track", "--map", Path("sim/map.osm"), "--scan-dir", Path("sim/scans"),
                         "--truth", Path("sim/ground_truth.txt"), "--initial", "5,5,0", "--out",
                         Path("files")});
  ASSERT_EQ(kExitOk, files.code) << files.err;
  ASSERT_EQ(kExitOk, Cli({"track", "--scene", scene, "--out", Path("scene")}).code);
  EXPECT_EQ(ReadTextFile(Path("files/trajectory.txt")), ReadTextFile(Path("scene/trajectory.txt")));

  // Without an initial pose the first frame is globally localized.
  const CliRun located = Cli({"track", "--map", Path("sim/map.osm"), "--scan-dir",
                           Path("sim/scans"), "--prior", "5.1,4.9", "--out", Path("prior")});
  ASSERT_EQ(kExitOk, located.code) << located.err;
  const auto rows = ReadTrajectoryFile(Path("prior/trajectory.txt"));
  ASSERT_FALSE(rows.empty());
  EXPECT_LT((rows.back().pose.translation() - Vec2(13., 5.)).norm(), 0.1);
}

TEST_F(CliTest, ClosedPassagesDiverge) {
  const std::string scene = kData + "/scenes/two_rooms_walk.ini";
  const CliRun relocalized = Cli({"track", "--scene", scene, "--passages", "closed", "--out",
                               Path("a")});
  EXPECT_EQ(kExitAlgorithm, relocalized.code);
  EXPECT_NE(std::string::npos, relocalized.err.find("error code=divergence exit=2"));
  EXPECT_TRUE(fs::exists(Path("a/trajectory.txt")));

  const CliRun strict = Cli({"track", "--scene", scene, "--passages", "closed", "--no-relocalize",
                          "--out", Path("b")});
  EXPECT_EQ(kExitAlgorithm, strict.code);
  EXPECT_NE(std::string::npos, strict.err.find("error code=divergence exit=2"));
}

TEST_F(CliTest, ExperimentTableOrdersPassageModes) {
  const CliRun run = Cli({"experiment", "--scene", kData + "/scenes/two_rooms_walk.ini", "--weight",
                       "on", "--corridorness", "on", "--passages", "adaptive,open,closed",
                       "--out", Path("e")});
  ASSERT_EQ(kExitOk, run.code) << run.err;
  std::istringstream table(run.out);
  std::string line;
  std::getline(table, line);
  EXPECT_EQ('#', line[0]);
  std::vector<double> rmse;
  std::vector<int> diverged;
  std::vector<std::string> modes;
  while (std::getline(table, line)) {
    std::istringstream fields(line);
    std::string weight, corridorness, mode;
    double r = 0., max = 0.;
    int d = 0;
    fields >> weight >> corridorness >> mode >> r >> max >> d;
    modes.push_back(mode);
    rmse.push_back(r);
    diverged.push_back(d);
  }
  ASSERT_EQ((std::vector<std::string>{"adaptive", "open", "closed"}), modes);
  EXPECT_EQ(0, diverged[0]);
  EXPECT_EQ(0, diverged[1]);
  EXPECT_GT(diverged[2], 0);
  EXPECT_LE(rmse[0], rmse[1]);
  EXPECT_LT(rmse[1], rmse[2]);
  EXPECT_EQ(run.out, ReadTextFile(Path("e/experiment.txt")));
}

TEST_F(CliTest, ExperimentIsACartesianProduct) {
  const std::string scene = Scene("two_rooms.osm", "[trajectory]\nwaypoints = 5,5; 6,5\n");
  const CliRun run = Cli({"experiment", "--scene", scene, "--passages", "adaptive,open"});
  ASSERT_EQ(kExitOk, run.code) << run.err;
  EXPECT_EQ(1 + 2 * 2 * 2, CountOf(run.out, "\n"));
  EXPECT_NE(std::string::npos, run.out.find("\noff off open "));
}

TEST_F(CliTest, Evaluate) {
  WriteTextFile(Path("truth.txt"), "0 0 0 0 1\n0.1 1 0 0 1\n");
  WriteTextFile(Path("est.txt"), "0 0.3 0 0 1\n0.1 1 0.4 0 1\n");
  const CliRun run = Cli({"evaluate", "--estimate", Path("est.txt"), "--truth", Path("truth.txt"),
                       "--errors", Path("errors.txt")});
  ASSERT_EQ(kExitOk, run.code) << run.err;
  EXPECT_NE(std::string::npos, run.out.find("ate_rmse=0.3536 ate_max=0.4000")) << run.out;
  EXPECT_EQ("# timestamp error_m\n0.000000 0.300000\n0.100000 0.400000\n",
            ReadTextFile(Path("errors.txt")));

  WriteTextFile(Path("one.txt"), "0 0 0 0 1\n");
  const CliRun short_run = Cli({"evaluate", "--estimate", Path("one.txt"), "--truth",
                             Path("truth.txt")});
  EXPECT_EQ(kExitAlgorithm, short_run.code);
  EXPECT_NE(std::string::npos, short_run.err.find("error code=insufficient_data"));
}

TEST_F(CliTest, Render) {
  const std::string map = kData + "/maps/office.osm";
  ASSERT_EQ(kExitOk, Cli({"render", "--map", map, "--out", Path("map.svg")}).code);
  const std::string svg = ReadTextFile(Path("map.svg"));
  EXPECT_EQ(8, CountOf(svg, "<path class=\"area"));
  EXPECT_EQ(10, CountOf(svg, "<line class=\"passage"));
  EXPECT_EQ(1, CountOf(svg, "stroke-dasharray"));
  EXPECT_EQ(0, CountOf(svg, "<polyline"));

  WriteTextFile(Path("truth.txt"), "0 11 1 0 1\n0.1 12 1 0 1\n0.2 13 1 0 1\n");
  WriteTextFile(Path("est.txt"), "0 11 1 0 1\n0.1 12 1.25 0 1\n0.2 13 1.6 0 1\n");
  ASSERT_EQ(kExitOk, Cli({"render", "--map", map, "--trajectory", Path("est.txt"), "--truth",
                          Path("truth.txt"), "--out", Path("overlay.svg")})
                         .code);
  const std::string overlay = ReadTextFile(Path("overlay.svg"));
  EXPECT_EQ(1, CountOf(overlay, "<polyline"));
  // Zero error is green, 0.25 m half way, 0.6 m red.
  EXPECT_NE(std::string::npos, overlay.find("fill=\"#00aa00\""));
  EXPECT_NE(std::string::npos, overlay.find("fill=\"#6e5500\""));
  EXPECT_NE(std::string::npos, overlay.find("fill=\"#dc0000\""));
  ASSERT_EQ(kExitOk, Cli({"render", "--map", map, "--trajectory", Path("est.txt"), "--truth",
                          Path("truth.txt"), "--out", Path("again.svg")})
                         .code);
  EXPECT_EQ(overlay, ReadTextFile(Path("again.svg")));

  WriteTextFile(Path("empty.txt"), "");
  const CliRun empty = Cli({"render", "--map", map, "--trajectory", Path("empty.txt"), "--out",
                         Path("empty.svg")});
  EXPECT_EQ(kExitOk, empty.code);
  EXPECT_NE(std::string::npos, empty.err.find("warning"));
  EXPECT_EQ(svg, ReadTextFile(Path("empty.svg")));
}

TEST_F(CliTest, TemplateAndExportMap) {
  const CliRun run = Cli({"template"});
  ASSERT_EQ(kExitOk, run.code);
  EXPECT_NE(std::string::npos, run.out.find("min_support = 0.75"));
  ASSERT_EQ(kExitOk, Cli({"export-map", "office", "--out", Path("o.osm")}).code);
  EXPECT_EQ(ReadTextFile(kData + "/maps/office.osm"), ReadTextFile(Path("o.osm")));
  EXPECT_EQ(kExitUsage, Cli({"export-map", "castle", "--out", Path("c.osm")}).code);
}

}  // namespace
}  // namespace cli
}  // namespace areagraph
