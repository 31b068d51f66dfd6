#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef SIXV_CLI_PATH
#error "SIXV_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SIXV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("exact and brute agree through the CLI") {
    auto ex = run("exact --gamma 1 --t 0.3 --n 4 --precision 256");
    auto br = run("brute --gamma 1 --t 0.3 --n 4 --precision 256");
    REQUIRE(ex.exit_code == 0);
    REQUIRE(br.exit_code == 0);
    auto jex = nlohmann::json::parse(ex.out);
    auto jbr = nlohmann::json::parse(br.out);
    CHECK(jbr["count"] == 42);
    const double z1 = std::atof(jex["Z_n"].get<std::string>().c_str());
    const double z2 = std::atof(jbr["Z"].get<std::string>().c_str());
    CHECK(z1 == doctest::Approx(z2).epsilon(1e-14));
}

TEST_CASE("endpoints symmetry at t = 0") {
    auto r = run("endpoints --gamma 1 --t 0");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(double(j["alpha"]) == doctest::Approx(-double(j["beta"])).epsilon(1e-12));
    CHECK(double(j["alpha_p"]) == doctest::Approx(-double(j["beta_p"])).epsilon(1e-12));
}

TEST_CASE("identity suite: exit code, tolerance, determinism") {
    auto r1 = run("identities --trials 200 --seed 7");
    REQUIRE(r1.exit_code == 0);
    auto j = nlohmann::json::parse(r1.out);
    CHECK(double(j["max_residual"]) <= 1e-12);
    CHECK(bool(j["pass"]));
    auto r2 = run("identities --trials 200 --seed 7");
    CHECK(r1.out == r2.out); // byte-identical for identical config
}

TEST_CASE("density emits CSV") {
    auto r = run("density --gamma 1 --t 0.2 --samples 16");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("x,rho\n", 0) == 0);
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 18); // header + 17 samples
}

TEST_CASE("subleading report") {
    auto r = run("subleading --gamma 1.2 --t 0.4 --n 5");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(double(j["f_value"]) == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
    CHECK(double(j["dev_from_one_sixth"]) <= 1e-10);
    CHECK(j["residues"].size() == 3);
}

TEST_CASE("toda subcommand") {
    auto r = run("toda --gamma 1 --t 0.2 --n 3 --precision 256");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    const double res = std::atof(j["residual"].get<std::string>().c_str());
    CHECK(res <= 1e-30);
}

TEST_CASE("error exit codes") {
    CHECK(run("params --gamma 1 --t 2").exit_code == 1);   // domain error
    CHECK(run("brute --gamma 1 --t 0 --n 7").exit_code == 1);
    CHECK(run("frobnicate").exit_code == 64);              // usage
    CHECK(run("exact --no-such-flag 1").exit_code == 64);
}

TEST_CASE("config file provides defaults, flags override") {
    const std::string path = "/tmp/sixv_test_config.ini";
    {
        std::ofstream f(path);
        f << "gamma = 1.5\n" << "t = 0.2\n";
    }
    auto r = run("params --config " + path);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(double(j["gamma"]) == doctest::Approx(1.5));
    CHECK(double(j["t"]) == doctest::Approx(0.2));
    auto r2 = run("params --config " + path + " --gamma 2.0");
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(double(j2["gamma"]) == doctest::Approx(2.0));
    std::remove(path.c_str());
}

TEST_CASE("asym reports the reduced and raw M1 forms") {
    auto r = run("asym --gamma 1.1 --t 0.37 --n 7");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(double(j["m1"]["raw12"]) ==
          doctest::Approx(double(j["m1"]["clean12"])).epsilon(1e-10));
    CHECK(double(j["F"]) > 0.0);
}
