#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "rankin/banach.hpp"
#include "rankin/io.hpp"
#include "rankin/optimizer.hpp"

#ifndef RANKIN_CLI_PATH
#error "RANKIN_CLI_PATH must point at the rankin binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string("\"") + RANKIN_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path temp_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "rankin-cli-tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string strip_wall_time(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("wall-time-ms") != std::string::npos) continue;
        if (line.find("wall_time_ms") != std::string::npos) continue;
        out << line << "\n";
    }
    return out.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("make counting space then bound") {
    const auto file = (temp_dir() / "c4.rankin").string();
    auto r = run("make --counting 4 --out \"" + file + "\"");
    REQUIRE(r.exit_code == 0);

    r = run("bound \"" + file + "\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("coherence-bound") != std::string::npos);
    CHECK(r.output.find("-0.3333333333333333") != std::string::npos);

    r = run("bound \"" + file + "\" --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["report"]["kind"] == "bound");
    CHECK(doc["report"]["coherence_bound"].get<double>() == -1.0 / 3.0);
    CHECK(doc["report"]["atoms"] == 4);
    CHECK(doc["input_digest"].get<std::string>().starts_with("fnv1a64:"));
}

TEST_CASE("make simplex then verify reaches equality") {
    const auto file = (temp_dir() / "simplex43.rankin").string();
    auto r = run("make --simplex 4 3 --out \"" + file + "\"");
    REQUIRE(r.exit_code == 0);

    r = run("verify \"" + file + "\" --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["report"]["satisfied"] == true);
    CHECK(std::abs(doc["report"]["slack"].get<double>()) <= 1e-11);
    CHECK(doc["report"]["kind"] == "verify");
}

TEST_CASE("circle discretizations report the counting bound") {
    const auto file = (temp_dir() / "circle4.rankin").string();
    REQUIRE(run("make --circle 4 --out \"" + file + "\"").exit_code == 0);
    const auto r = run("bound \"" + file + "\" --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["report"]["coherence_bound"].get<double>() == -1.0 / 3.0);

    const auto two = (temp_dir() / "circle2.rankin").string();
    REQUIRE(run("make --circle 2 --out \"" + two + "\"").exit_code == 0);
    const auto v = run("verify \"" + two + "\" --json");
    CHECK(v.exit_code == 0);
    const auto vd = nlohmann::json::parse(v.output);
    CHECK(vd["report"]["coherence"].get<double>() == -1.0);  // antipodal pair
}

TEST_CASE("exit codes cover the documented failure modes") {
    // 2: malformed file
    const auto bad = (temp_dir() / "bad.rankin").string();
    std::ofstream(bad) << "this is not a family\n";
    CHECK(run("bound \"" + bad + "\"").exit_code == 2);

    // 2: missing file
    CHECK(run("bound \"" + (temp_dir() / "missing.rankin").string() + "\"").exit_code == 2);

    // 2: bad flags
    CHECK(run("optimize \"" + bad + "\"").exit_code == 2);  // --dim required
    CHECK(run("nonsense").exit_code == 2);

    // 3: single atom bound
    const auto one = (temp_dir() / "one.rankin").string();
    std::ofstream(one) << "rankin-family v1\natoms 1\natom a 1\nend\n";
    CHECK(run("bound \"" + one + "\"").exit_code == 3);

    // 3: simplex below dimension n-1
    CHECK(run("make --simplex 4 2 --out \"" + (temp_dir() / "x.rankin").string() + "\"")
              .exit_code == 3);

    // 5: un-normalized family
    const auto unnorm = (temp_dir() / "unnorm.rankin").string();
    std::ofstream(unnorm) << "rankin-family v1\natoms 2\natom a 1\natom b 1\n"
                             "dim 2\nvectors\n2 0\n0 1\nend\n";
    const auto r = run("verify \"" + unnorm + "\"");
    CHECK(r.exit_code == 5);
    CHECK(r.output.find("precondition") != std::string::npos);

    // 4: a violated verdict cannot arise from valid input (that is the
    // theorem), so force the satisfied=false branch with a tolerance no
    // family can meet and confirm the exit wiring
    const auto basis = (temp_dir() / "basis.rankin").string();
    std::ofstream(basis) << "rankin-family v1\natoms 2\natom a 1\natom b 1\n"
                            "dim 2\nvectors\n1 0\n0 1\nend\n";
    const auto v = run("verify \"" + basis + "\" --tolerance -2 --json");
    CHECK(v.exit_code == 4);
    CHECK(nlohmann::json::parse(v.output)["report"]["satisfied"] == false);
}

TEST_CASE("optimize writes a verifiable family and is deterministic") {
    const auto space = (temp_dir() / "c3.rankin").string();
    REQUIRE(run("make --counting 3 --out \"" + space + "\"").exit_code == 0);

    const auto fam = (temp_dir() / "opt32.rankin").string();
    // full default iteration budget so the annealing schedule reaches its
    // cold end; fewer restarts keep the test quick
    const std::string args = "optimize \"" + space +
                             "\" --dim 2 --seed 7 --restarts 6 --out \"" + fam + "\"";
    const auto a = run(args);
    REQUIRE(a.exit_code == 0);
    CHECK(run("verify \"" + fam + "\"").exit_code == 0);

    const auto opt = nlohmann::json::parse(run(args + " --json").output);
    CHECK(opt["report"]["gap"].get<double>() <= 1e-6);
    CHECK(opt["report"]["certificate"] == "equality-certified");
    CHECK(opt["report"]["trace"].size() == 6);
    CHECK(opt["report"]["max_iters"] == 5000);

    // identical seeded sequential runs are byte-identical modulo wall time
    const auto b = run(args);
    CHECK(strip_wall_time(a.output) == strip_wall_time(b.output));

    const auto fam_a = rankin::io::read_text_file(fam);
    REQUIRE(run(args).exit_code == 0);
    CHECK(rankin::io::read_text_file(fam) == fam_a);
}

TEST_CASE("functional verify round trip") {
    // valid functional family: the Hilbert simplex with p = 2 duality
    const auto simplex = rankin::simplex_family(3, 2);
    const auto ff = rankin::FunctionalFamily::from_vector_family(simplex, 2.0);
    const auto good = (temp_dir() / "func-good.rankin").string();
    rankin::io::write_text_file(good, rankin::io::write_functional_family(ff));

    auto r = run("verify --functional \"" + good + "\" --json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["report"]["kind"] == "verify-functional");
    CHECK(doc["report"]["satisfied"] == true);
    CHECK(std::abs(doc["report"]["coherence"].get<double>() + 0.5) <= 1e-11);

    // the l-infinity family violating condition (iii) is rejected with a report
    std::vector<double> vecs{1.0, 0.5, -0.2, 1.0, -0.9, -1.0};
    std::vector<double> funcs;
    for (int i = 0; i < 3; ++i) {
        const auto f = rankin::duality_functional(
            std::span<const double>(vecs.data() + 2 * i, 2),
            std::numeric_limits<double>::infinity());
        funcs.insert(funcs.end(), f.begin(), f.end());
    }
    const rankin::FunctionalFamily violator(rankin::counting_space(3), 2,
                                            std::numeric_limits<double>::infinity(),
                                            vecs, funcs);
    const auto badf = (temp_dir() / "func-bad.rankin").string();
    rankin::io::write_text_file(badf, rankin::io::write_functional_family(violator));

    r = run("verify --functional \"" + badf + "\" --json");
    CHECK(r.exit_code == 5);
    doc = nlohmann::json::parse(r.output);
    CHECK(doc["report"]["kind"] == "precondition-violation");
    bool mentions_iii = false;
    for (const auto& item : doc["report"]["violations"]) {
        if (item["condition"].get<std::string>().find("iii") != std::string::npos) {
            mentions_iii = true;
        }
    }
    CHECK(mentions_iii);

    // --functional on a plain family document is a usage error
    const auto plain = (temp_dir() / "plain.rankin").string();
    rankin::io::write_text_file(plain, rankin::io::write_family(simplex));
    CHECK(run("verify --functional \"" + plain + "\"").exit_code == 2);
}

}  // TEST_SUITE
