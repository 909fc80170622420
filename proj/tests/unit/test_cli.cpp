#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int exit_code(const std::string& command) {
    const int status = std::system((command + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path fresh(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("qwalk_cli_" + name);
    fs::remove_all(p);
    return p;
}

const std::string kQwalk = QWALK_BIN;
const std::string kGas = GAS_BIN;

TEST(Cli, PresetSucceeds) {
    const fs::path out = fresh("preset");
    EXPECT_EQ(exit_code(kQwalk + " preset --initial sep1 --mode hpp --steps 6 --out " + out.string()), 0);
    EXPECT_TRUE(fs::exists(out / "marginal_t006.csv"));
    EXPECT_TRUE(fs::exists(out / "entropy.csv"));
}

TEST(Cli, CompareSucceeds) {
    const fs::path out = fresh("compare");
    EXPECT_EQ(exit_code(kQwalk + " compare --initial ent --steps 4 --out " + out.string()), 0);
    EXPECT_TRUE(fs::exists(out / "compare.csv"));
}

TEST(Cli, RunConfig) {
    const fs::path dir = fresh("run");
    fs::create_directories(dir);
    const fs::path cfg = dir / "run.json";
    std::ofstream(cfg) << R"({"kind": "single", "initial": "max-spread", "steps": 5, "output_dir": ")"
                       << (dir / "out").string() << "\"}";
    EXPECT_EQ(exit_code(kQwalk + " run " + cfg.string()), 0);
    EXPECT_TRUE(fs::exists(dir / "out" / "marginal_t005.csv"));
}

TEST(Cli, ConfigErrorsExitOne) {
    const fs::path dir = fresh("bad");
    fs::create_directories(dir);
    const fs::path cfg = dir / "bad.json";
    std::ofstream(cfg) << R"({"kind": "two-walker", "initial": "sep1", "steps": 0})";
    EXPECT_EQ(exit_code(kQwalk + " run " + cfg.string()), 1);
    EXPECT_EQ(exit_code(kQwalk + " run " + (dir / "missing.json").string()), 1);
    EXPECT_EQ(exit_code(kQwalk + " preset --initial nope --out " + (dir / "o").string()), 1);
    EXPECT_EQ(exit_code(kQwalk + " frobnicate"), 1);
    EXPECT_EQ(exit_code(kGas + " run --size 7 --out " + (dir / "g").string()), 1);
}

TEST(Cli, BudgetExitsTwo) {
    const fs::path out = fresh("budget");
    EXPECT_EQ(exit_code(kQwalk + " preset --initial sep1 --steps 10 --budget 1000 --out " + out.string()), 2);
}

TEST(Cli, GasRun) {
    const fs::path out = fresh("gas");
    EXPECT_EQ(exit_code(kGas + " run --size 16 --seed 42 --steps 20 --out " + out.string()), 0);
    EXPECT_TRUE(fs::exists(out / "snapshot_t000.pgm"));
    EXPECT_TRUE(fs::exists(out / "snapshot_t020.pgm"));
    EXPECT_TRUE(fs::exists(out / "counts.csv"));
}

TEST(Cli, ThreadsVariableAccepted) {
    const fs::path out = fresh("threads");
    EXPECT_EQ(exit_code("QWALK_THREADS=0 " + kQwalk + " preset --steps 3 --out " + out.string()), 0);
    EXPECT_EQ(exit_code("QWALK_THREADS=2 " + kQwalk + " preset --steps 3 --out " + out.string()), 0);
}

}  // namespace
