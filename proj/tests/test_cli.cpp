#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "json.hpp"
#include "knotdist/cli.hpp"

using namespace knotdist;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("knotdist-cli-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
};

const char* kDelta925 = "-3t^2+12t-17+12t^-1-3t^-2";

}  // namespace

TEST_CASE("alex and invariants") {
    TempDir dir;
    const auto tref = dir.write("tref.txt", "-1 1\n0 -1\n");
    const auto empty = dir.write("empty.txt", "");
    const auto odd = dir.write("odd.txt", "1 0 0\n0 1 0\n0 0 1\n");
    const auto fig8 = dir.write("fig8.txt", "1 1\n0 -1\n");

    Run r = run({"alex", "--matrix", tref});
    CHECK(r.code == 0);
    CHECK(r.out == "t-1+t^-1\n");
    CHECK(run({"alex", "--matrix", empty}).out == "1\n");
    r = run({"alex", "--matrix", odd});
    CHECK(r.code == 2);
    CHECK(r.err.find("size must be even") != std::string::npos);
    CHECK(run({"alex", "--matrix", dir.write("bad.txt", "0 0\n0 0\n")}).code == 2);
    CHECK(run({"alex", "--matrix", (dir.path / "missing.txt").string()}).code == 2);
    CHECK(run({"alex"}).code == 1);
    CHECK(run({"alex", "--matrix", tref, "--bogus"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--help"}).code == 0);

    CHECK(run({"invariants", "--matrix", tref}).out == "alexander: t-1+t^-1\nsignature: -2\ndeterminant: 3\n");
    CHECK(run({"invariants", "--matrix", empty}).out == "alexander: 1\nsignature: 0\ndeterminant: 1\n");
    CHECK(run({"invariants", "--matrix", fig8}).out == "alexander: -t+3-t^-1\nsignature: 0\ndeterminant: 5\n");
}

TEST_CASE("blanchfield and quadform") {
    TempDir dir;
    const auto tref = dir.write("tref.txt", "-1 1\n0 -1\n");
    Run r = run({"blanchfield", "--matrix", tref});
    CHECK(r.code == 0);
    CHECK(r.out.find("beta(e1, e1): t^2-2t+1 / t^2-t+1") != std::string::npos);
    const auto border = dir.write("border.txt", "-1 0\n1 -1\n");
    const auto empty = dir.write("empty.txt", "");
    r = run({"blanchfield", "--matrix", border, "--inner", empty});
    CHECK(r.code == 0);
    CHECK(r.out.find("equals") != std::string::npos);
    CHECK(run({"blanchfield", "--matrix", tref, "--inner", empty}).code == 2);

    r = run({"quadform", "--h", "1", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("outcome: Witness\nx: 1\ny: 1\nsign: +1\n") == 0);
    CHECK(run({"quadform", "--h", "1", "--d", "2"}).out.find("outcome: Refuted") == 0);
    CHECK(run({"quadform", "--h", "0", "--d", "2"}).code == 2);
    CHECK(run({"quadform", "--h", "x", "--d", "2"}).code == 1);
}

TEST_CASE("obstruct") {
    Run r = run({"obstruct", "--delta1", "t-1+t^-1", "--delta2", kDelta925, "--ua1", "1", "--ua2", "1"});
    CHECK(r.code == 0);
    for (const char* line : {"rho_lower: 2\n", "rho_upper: 2\n", "dga_lower: 2\n", "dga_upper: 2\n", "dg_lower: 2\n"}) {
        CAPTURE(line);
        CHECK(r.out.find(line) != std::string::npos);
    }
    CHECK(r.out.find("-2 = 2 + 4*(-1)") != std::string::npos);

    r = run({"obstruct", "--delta1", kDelta925, "--delta2", kDelta925});
    CHECK(r.out.find("rho_lower: 0\nrho_upper: 0\n") != std::string::npos);

    r = run({"obstruct", "--delta1", "t-1+t^-1", "--delta2", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("witness (x, y) = (1, 1)") != std::string::npos);
    CHECK(r.out.find("warning: ") != std::string::npos);

    r = run({"obstruct", "--knot1", "3_1", "--knot2", "9_25", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rho_lower"] == 2);
    CHECK(j["dga_upper"].is_null());
    CHECK(j["criteria"][0]["criterion"] == "signature");
    CHECK(j["criteria"][0]["applicable"] == true);

    TempDir dir;
    const auto tref = dir.write("tref.txt", "-1 1\n0 -1\n");
    r = run({"obstruct", "--matrix1", tref, "--knot2", "4_1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("criterion: parity\napplicable: true\nverdict: Obstructs") != std::string::npos);

    CHECK(run({"obstruct", "--delta1", "t-1+t^-1"}).code == 1);
    CHECK(run({"obstruct", "--delta1", "t-1+t^-1", "--matrix1", tref, "--delta2", "1"}).code == 1);
    CHECK(run({"obstruct", "--delta1", "t-1+t^-1", "--delta2", "t^"}).code == 2);
    CHECK(run({"obstruct", "--knot1", "3_1", "--knot2", "nope"}).code == 1);
    CHECK(run({"obstruct", "--delta1", "t-1+t^-1", "--delta2", kDelta925, "--ua2", "0"}).code == 2);
    CHECK(run({"obstruct", "--delta1", "t-1+t^-1", "--delta2", "0"}).code == 2);

    const auto catalog = dir.write("cat.csv", "label,polynomial,signature,determinant\n5_2,2t-3+2t^-1,-2,7\n");
    r = run({"obstruct", "--knot1", "3_1", "--knot2", "5_2", "--catalog", catalog});
    CHECK(r.code == 0);
    CHECK(r.out.find("pair: 3_1 | 5_2") == 0);
}

TEST_CASE("obstruct batch mode keeps input order and is reproducible") {
    TempDir dir;
    const auto tref = dir.write("tref.txt", "-1 1\n0 -1\n");
    const auto manifest = dir.write("pairs.txt", "# pairs\n" + tref + " | " + kDelta925 + "\n3_1 | 4_1\n\n" +
                                                     "t-1+t^-1 | 3\n9_25 | 9_25\n2t-3+2t^-1 | t-1+t^-1\n");
    const Run batch = run({"obstruct", "--manifest", manifest, "--jobs", "3"});
    REQUIRE(batch.code == 0);
    std::string expected = run({"obstruct", "--matrix1", tref, "--delta2", kDelta925}).out;
    expected += "---\n" + run({"obstruct", "--knot1", "3_1", "--knot2", "4_1"}).out;
    expected += "---\n" + run({"obstruct", "--delta1", "t-1+t^-1", "--delta2", "3"}).out;
    expected += "---\n" + run({"obstruct", "--knot1", "9_25", "--knot2", "9_25"}).out;
    expected += "---\n" + run({"obstruct", "--delta1", "2t-3+2t^-1", "--delta2", "t-1+t^-1"}).out;
    CHECK(batch.out == expected);
    CHECK(run({"obstruct", "--manifest", manifest, "--jobs", "1"}).out == batch.out);

    const auto broken = dir.write("broken.txt", "3_1 | 4_1\n3_1 | t^\n");
    const Run b = run({"obstruct", "--manifest", broken});
    CHECK(b.code == 2);
    CHECK(b.out.find("---\nerror: ") != std::string::npos);
    CHECK(run({"obstruct", "--manifest", dir.write("nobar.txt", "3_1 4_1\n")}).code == 2);
    CHECK(run({"obstruct", "--manifest", manifest, "--knot1", "3_1"}).code == 1);
}

TEST_CASE("verify") {
    Run r = run({"verify", "--suite", "eq5", "--seed", "42", "--iters", "200"});
    CHECK(r.code == 0);
    CHECK(r.out == "suite: eq5\npassed: 200\nfailed: 0\n");
    CHECK(run({"verify", "--suite", "eq5", "--seed", "42", "--iters", "200"}).out == r.out);
    r = run({"verify", "--suite", "quadform-oracle", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("failed: 0") != std::string::npos);
    CHECK(run({"verify", "--suite", "main-theorem", "--seed", "1", "--iters", "200"}).out.find("passed: 200") !=
          std::string::npos);
    CHECK(run({"verify", "--suite", "nope"}).code == 1);
    CHECK(run({"verify"}).code == 1);
}

TEST_CASE("table") {
    CHECK(run({"table", "list"}).out == "3_1\n4_1\n9_25\n");
    Run r = run({"table", "show", "3_1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("matrix: [[-1, 1], [0, -1]]") != std::string::npos);
    CHECK(r.out.find("signature: -2") != std::string::npos);
    CHECK(run({"table", "show", "9_25"}).out.find("note: no Seifert matrix bundled") != std::string::npos);
    CHECK(run({"table", "show", "8_19"}).code == 1);
    CHECK(run({"table"}).code == 1);

    TempDir dir;
    const auto csv = dir.write("k.csv", "5_2,2t-3+2t^-1,-2,7\n");
    r = run({"table", "import", csv});
    CHECK(r.code == 0);
    CHECK(r.out.find("label: 5_2") == 0);
    CHECK(run({"table", "import", dir.write("bad.csv", "5_2,2t-3+2t^-1,-2,9\n")}).code == 2);
}
