#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "rstirling/cli.hpp"
#include "rstirling/stirling.hpp"

using namespace rstirling;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage = {"rstirling"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : storage) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    CliRun result;
    result.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

// restores the shared triangle store no matter how the test exits
struct CacheGuard {
    ~CacheGuard() { stirling_cache().clear(); }
};

}  // namespace

TEST_CASE("stirling subcommand prints exact values") {
    CHECK(run({"stirling", "--r", "2", "--p", "6", "--m", "2"}).out == "25\n");
    CHECK(run({"stirling", "--r", "1", "--p", "0", "--m", "0"}).out == "1\n");
    CHECK(run({"stirling", "--r", "2", "--p", "5", "--m", "3"}).out == "0\n");
    CHECK(run({"stirling", "--r", "2", "--p", "5", "--m", "3", "--method", "lemma"}).out == "0\n");
    CHECK(run({"stirling", "--r", "1", "--p", "20", "--m", "6", "--method", "lemma"}).out ==
          run({"stirling", "--r", "1", "--p", "20", "--m", "6", "--method", "recurrence"}).out);

    const CliRun all = run({"stirling", "--r", "2", "--p", "6", "--m", "2", "--method", "all"});
    CHECK(all.code == 0);
    CHECK(all.out == "lemma=25\nrecurrence=25\nbrute=25\n");

    const CliRun big = run({"stirling", "--r", "1", "--p", "30", "--m", "4", "--method", "all"});
    CHECK(big.code == 0);
    CHECK(big.out.find("brute=skipped") != std::string::npos);
}

TEST_CASE("stirling subcommand argument errors") {
    CHECK(run({"stirling", "--r", "2", "--p", "6"}).code == 2);
    CHECK(run({"stirling", "--r", "0", "--p", "6", "--m", "2"}).code == 2);
    CHECK(run({"stirling", "--r", "2", "--p", "6", "--m", "2", "--method", "nope"}).code == 2);
    CHECK(run({"stirling", "--r", "1", "--p", "14", "--m", "2", "--method", "brute"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("corrupted tables surface as oracle disagreement") {
    CacheGuard guard;
    stirling_cache().clear();
    stirling_cache().corrupt_entry_for_testing(2, 6, 2);
    const CliRun bad = run({"stirling", "--r", "2", "--p", "6", "--m", "2", "--method", "all"});
    CHECK(bad.code == 3);
    CHECK(bad.out.find("recurrence=26") != std::string::npos);
    CHECK(bad.err.find("disagreement") != std::string::npos);
}

TEST_CASE("bounds subcommand prints the report") {
    const CliRun rep = run({"bounds", "--r", "1", "--p", "6", "--m", "2"});
    CHECK(rep.code == 0);
    CHECK(rep.out.find("exact=31\n") != std::string::npos);
    CHECK(rep.out.find("rd_lower=31 (~31)") != std::string::npos);
    CHECK(rep.out.find("combined_L=57/2 (~28.5)") != std::string::npos);
    CHECK(rep.out.find("combined_U=32") != std::string::npos);
    CHECK(rep.out.find("expo_upper=") == std::string::npos);

    const CliRun collapsed = run({"bounds", "--r", "2", "--p", "4", "--m", "2"});
    CHECK(collapsed.out.find("exact=3\n") != std::string::npos);
    CHECK(collapsed.out.find("combined_L=3") != std::string::npos);
    CHECK(collapsed.out.find("combined_U=3") != std::string::npos);
    CHECK(collapsed.out.find("expo_upper=") != std::string::npos);
    CHECK(collapsed.out.find("rd_lower=") == std::string::npos);

    CHECK(run({"bounds", "--r", "2", "--p", "3", "--m", "2"}).code == 2);

    // ordering of every printed bound pair on a non-trivial case
    const CliRun ten = run({"bounds", "--r", "1", "--p", "10", "--m", "3"});
    CHECK(ten.code == 0);
    CHECK(ten.out.find("exact=9330\n") != std::string::npos);
}

TEST_CASE("moment subcommand") {
    CHECK(run({"moment", "--r", "1", "--k", "2", "--m", "2"}).out == "7/6\n");
    CHECK(run({"moment", "--r", "3", "--k", "0", "--m", "5"}).out == "1\n");
    CHECK(run({"moment", "--r", "1", "--k", "2", "--m", "0"}).code == 2);

    const CliRun mc = run({"moment", "--r", "1", "--k", "2", "--m", "2", "--mc", "200000",
                           "--seed", "42"});
    CHECK(mc.code == 0);
    CHECK(mc.out.find("mc_mean=") != std::string::npos);
    const auto z_pos = mc.out.find("z=");
    REQUIRE(z_pos != std::string::npos);
    const double z = std::stod(mc.out.substr(z_pos + 2));
    CHECK(std::fabs(z) < 4.0);

    // k=0 collapses to a constant; the z column must stay finite
    const CliRun constant = run({"moment", "--r", "2", "--k", "0", "--m", "3", "--mc", "100"});
    CHECK(constant.out.find("z=0\n") != std::string::npos);
}

TEST_CASE("bell subcommand") {
    const CliRun plain = run({"bell", "--p-max", "5"});
    CHECK(plain.code == 0);
    CHECK(plain.out.find("5 52\n") != std::string::npos);
    CHECK(plain.out.find("1 1\n") != std::string::npos);

    const CliRun upper = run({"bell", "--p-max", "2", "--with-upper"});
    CHECK(upper.out.find("2 2 2 ") != std::string::npos);  // B(2)=U(2)=2
    const auto lines_end = upper.out.rfind(' ');
    CHECK(upper.out.substr(lines_end + 1) == "1\n");  // ratio U/B = 1

    CHECK(run({"bell", "--p-max", "0"}).code == 2);
}

TEST_CASE("figure subcommand writes files and maps error kinds to exit codes") {
    const auto path = std::filesystem::temp_directory_path() / "rstirling_cli_fig.csv";
    const CliRun ok = run({"figure", "--id", "4", "--p-max", "12", "--out", path.string()});
    CHECK(ok.code == 0);
    CHECK(std::filesystem::exists(path));
    std::filesystem::remove(path);

    CHECK(run({"figure", "--id", "9"}).code == 2);
    CHECK(run({"figure", "--id", "1", "--p-min", "9", "--p-max", "3"}).code == 2);
    CHECK(run({"figure", "--id", "1", "--out", "/nonexistent-dir/f.csv", "--p-max", "8"}).code == 4);
}

TEST_CASE("verify subcommand: healthy subset passes") {
    const CliRun ok = run({"verify", "--level", "quick", "--only", "factorial"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS  factorial-recurrence") != std::string::npos);

    const CliRun none = run({"verify", "--only", "no-such-check"});
    CHECK(none.code == 0);
    CHECK(none.out.find("no checks matched") != std::string::npos);
}

TEST_CASE("verify subcommand: corrupted table is caught with a counterexample") {
    CacheGuard guard;
    stirling_cache().clear();
    stirling_cache().corrupt_entry_for_testing(2, 6, 2);
    const CliRun bad = run({"verify", "--level", "quick", "--only", "oracle-triple"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL  oracle-triple-agreement") != std::string::npos);
    CHECK(bad.out.find("first counterexample") != std::string::npos);
    CHECK(bad.out.find("(r=2,p=6,m=2)") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
}
