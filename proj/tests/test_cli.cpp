#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "trv/json_io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TRV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        output.append(buf, got);
    }
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), std::move(output)};
}

std::string temp_path(const std::string& name) {
    return ::testing::TempDir() + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    EXPECT_TRUE(in.good()) << path;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, NoArgumentsIsAnInputError) {
    EXPECT_EQ(run_cli("").exit_code, 1);
    EXPECT_EQ(run_cli("sphere --dim 3 --format xml").exit_code, 1);
}

TEST(Cli, HelpExitsZero) {
    const RunResult r = run_cli("--help");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("transversals"), std::string::npos);
}

TEST(Cli, SphereSuitePassesAndIsDeterministic) {
    const std::string args = "sphere --dim 3 --samples 500 --seed 1";
    const RunResult a = run_cli(args);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_NE(a.output.find("\"check\":\"summary\""), std::string::npos);
    EXPECT_NE(a.output.find("\"pass\":true"), std::string::npos);
    EXPECT_NE(a.output.find("discontinuity_jump_is_two"), std::string::npos);

    const RunResult b = run_cli(args);
    EXPECT_EQ(a.output, b.output);

    const RunResult other_seed = run_cli("sphere --dim 3 --samples 500 --seed 2");
    EXPECT_EQ(other_seed.exit_code, 0);
    EXPECT_NE(a.output, other_seed.output);
}

TEST(Cli, SphereDimTwoSkipsTheDiscontinuityScan) {
    const RunResult r = run_cli("sphere --dim 2 --samples 300 --seed 1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"skipped\":true"), std::string::npos);
}

TEST(Cli, SphereCsvFormat) {
    const RunResult r = run_cli("sphere --dim 3 --samples 200 --seed 1 --format csv");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output.rfind("check,", 0), 0u);  // header first
}

TEST(Cli, SphereInvalidDimension) {
    EXPECT_EQ(run_cli("sphere --dim 0 --samples 10 --seed 1").exit_code, 1);
}

TEST(Cli, CayleySuitePassesWithOctonionWitness) {
    const RunResult r = run_cli("cayley --dim 8 --samples 500 --seed 1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"associative\":false"), std::string::npos);
    EXPECT_NE(r.output.find("witness_residual"), std::string::npos);

    const RunResult again = run_cli("cayley --dim 8 --samples 500 --seed 1");
    EXPECT_EQ(r.output, again.output);
}

TEST(Cli, CayleyRejectsBadDimension) {
    EXPECT_EQ(run_cli("cayley --dim 3 --samples 10 --seed 1").exit_code, 1);
}

TEST(Cli, ExtensionOnQ3) {
    const std::string path = temp_path("q3.json");
    trv::save_quasigroup(path, fixtures::q3());
    const RunResult r = run_cli("extension " + path);
    EXPECT_EQ(r.exit_code, 0);
    // both the torsion extension and the universal one have order 6
    EXPECT_NE(r.output.find("\"check\":\"torsion_extension\",\"order\":6"),
              std::string::npos);
    EXPECT_NE(r.output.find("\"check\":\"universal_extension\",\"order\":6"),
              std::string::npos);
    EXPECT_NE(r.output.find("\"roundtrip_exact\":true"), std::string::npos);
}

TEST(Cli, ExtensionOnZ4WritesGroupFiles) {
    const std::string path = temp_path("z4.json");
    trv::save_quasigroup(path, fixtures::z4());
    const std::string torsion = temp_path("z4_torsion.json");
    const std::string universal = temp_path("z4_universal.json");
    const RunResult r = run_cli("extension " + path + " --emit-group " + torsion +
                                " --emit-universal " + universal);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"check\":\"torsion_extension\",\"order\":4"),
              std::string::npos);
    EXPECT_NE(r.output.find("\"check\":\"universal_extension\",\"order\":24"),
              std::string::npos);

    // the emitted files are valid canonical group files
    const trv::FiniteGroup t = trv::load_group(torsion);
    EXPECT_EQ(t.order(), 4);
    const trv::FiniteGroup u = trv::load_group(universal);
    EXPECT_EQ(u.order(), 24);
}

TEST(Cli, ExtensionCapExceeded) {
    const std::string path = temp_path("q9.json");
    trv::save_quasigroup(path, trv::random_quasigroup(9, 1));
    EXPECT_EQ(run_cli("extension " + path).exit_code, 1);
}

TEST(Cli, ExtensionIoErrors) {
    EXPECT_EQ(run_cli("extension /nonexistent/q.json").exit_code, 3);
    const std::string path = temp_path("broken.json");
    std::ofstream(path) << "{not json";
    EXPECT_EQ(run_cli("extension " + path).exit_code, 3);
}

TEST(Cli, TransversalsOnS3Subgroup) {
    const RunResult r = run_cli("transversals S3 --subgroup \"{e,(12)}\"");
    EXPECT_EQ(r.exit_code, 0);
    // 4 transversals, each a line
    std::size_t count = 0, pos = 0;
    while ((pos = r.output.find("\"check\":\"transversal\"", pos)) != std::string::npos) {
        ++count;
        pos += 10;
    }
    EXPECT_EQ(count, 4u);
    EXPECT_NE(r.output.find("\"check\":\"isomorphism_classes\""), std::string::npos);
    EXPECT_NE(r.output.find("\"torsion_matches_intrinsic\":true"), std::string::npos);
}

TEST(Cli, TransversalsWholeGroupSubgroup) {
    const RunResult r = run_cli("transversals Z4 --subgroup \"0,1,2,3\"");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"transversals\":1"), std::string::npos);
}

TEST(Cli, TransversalsAllSubgroupsAndGroupFile) {
    const std::string path = temp_path("d4.json");
    trv::save_group(path, trv::dihedral_group(4));
    const RunResult r = run_cli("transversals " + path);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.output.find("\"check\":\"subgroup\""), std::string::npos);
}

TEST(Cli, TransversalsBadInputs) {
    EXPECT_EQ(run_cli("transversals NoSuchGroupAnywhere").exit_code, 3);
    EXPECT_EQ(run_cli("transversals S3 --subgroup \"e,(99)\"").exit_code, 1);
}

TEST(Cli, OutFlagWritesTheReport) {
    const std::string out = temp_path("report.jsonl");
    const RunResult r = run_cli("cayley --dim 4 --samples 100 --seed 3 --out " + out);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.output.empty());
    const std::string content = slurp(out);
    EXPECT_NE(content.find("\"check\":\"summary\""), std::string::npos);
}
