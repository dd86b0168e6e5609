#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#ifndef SPECDL_BIN
#error "SPECDL_BIN must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, bool capture_stderr = false) {
    std::string cmd = std::string(SPECDL_BIN) + " " + args +
                      (capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("energy command reports exact family values") {
    auto r = run_cli("--family complete_bipartite:2,3 energy");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["energy"]["dle"].get<double>() == doctest::Approx(12.4));
    CHECK(j["energy"]["dle_exact"].get<std::string>() == "62/5");
    CHECK(j["energy"]["sigma"].get<int>() == 3);
    CHECK(j["energy"]["wiener"].get<long long>() == 14);

    auto k5 = run_cli("--family complete:5 energy");
    auto j5 = nlohmann::json::parse(k5.out);
    CHECK(j5["energy"]["dle"].get<double>() == doctest::Approx(8.0));
}

TEST_CASE("spectrum command on the paw graph6") {
    // Round-trip the paw through its emitted graph6 form.
    auto fam = run_cli("--family connectivity_family:4,1,1 spectrum");
    CHECK(fam.exit_code == 0);
    auto j = nlohmann::json::parse(fam.out);
    std::string g6 = j["graph"]["graph6"].get<std::string>();
    auto via_g6 = run_cli("--graph6 '" + g6 + "' spectrum");
    CHECK(via_g6.exit_code == 0);
    auto j2 = nlohmann::json::parse(via_g6.out);
    std::vector<double> expect{7, 5, 4, 0};
    for (int i = 0; i < 4; ++i)
        CHECK(j2["spectra"]["distance_laplacian"][i].get<double>() ==
              doctest::Approx(expect[i]).epsilon(1e-9));
}

TEST_CASE("identical inputs produce byte-identical JSON") {
    auto a = run_cli("--family connectivity_family:6,1,2 energy");
    auto b = run_cli("--family connectivity_family:6,1,2 energy");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto s1 = run_cli("search bipartite --n 5");
    auto s2 = run_cli("search bipartite --n 5");
    CHECK(s1.out == s2.out);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("--family 'complete_split:9,5' energy").exit_code == 2);
    CHECK(run_cli("--family 'blanc:3' energy").exit_code == 2);
    CHECK(run_cli("--graph6 'C`' energy").exit_code == 3); // disconnected 2K_2
    CHECK(run_cli("energy").exit_code == 2);               // no input
    CHECK(run_cli("verify brouwer --n 5").exit_code == 0);
    CHECK(run_cli("verify wiener-lower --family star:4").exit_code == 0);
    CHECK(run_cli("verify connectivity-bound --n 4 --k 1").exit_code == 0);
    CHECK(run_cli("search independence --n 5 --alpha 3").exit_code == 0);
    CHECK(run_cli("search independence --n 5").exit_code == 2); // missing alpha
    CHECK(run_cli("verify dle-via-sk --family path:5").exit_code == 2); // diameter 3
}

TEST_CASE("stderr carries no JSON") {
    auto r = run_cli("--graph6 'C`' energy", /*capture_stderr=*/true);
    CHECK(r.exit_code == 3);
    CHECK(!r.out.empty());
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("csv export flattens bound checks") {
    auto r = run_cli("--format csv verify second-smallest --family cycle:5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("graph,theorem,case,index,applicable,lhs,rhs,holds,equality,", 0) == 0);
    CHECK(r.out.find("second-smallest") != std::string::npos);
    // One header plus one data row.
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("verify-all sweep at n=4 is clean") {
    auto r = run_cli("verify all --n 4");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["violations_total"].get<long long>() == 0);
    CHECK(j["all_hold"].get<bool>());
    CHECK(j["equality_characterization_mismatches_total"].get<long long>() == 0);
}

TEST_CASE("discrepancy flag surfaces in reports") {
    auto r = run_cli("verify connectivity-bound --family connectivity_family:4,1,1");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto c = j["bound_checks"][0];
    CHECK(c["rhs"].get<double>() == doctest::Approx(8.0));
    CHECK(c["printed_rhs"].get<double>() == doctest::Approx(4.0));
    CHECK(c["printed_form_differs"].get<bool>());
}
