#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    Run r;
    const std::string cmd = std::string(LRC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("construct prints the worked example") {
    auto r = run("construct --n 3,5 --rho 2,2 --dg 7,8 --q 16 --trials 100");
    CHECK(r.status == 0);
    CHECK(has(r.out, "[15, 6]"));
    CHECK(has(r.out, "Availability: pass"));
}

TEST_CASE("construct emits parseable JSON") {
    auto r = run("construct --n 3,4 --rho 2,2 --dg 5,7 --q 13 --format json --exact");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("k") == 4);
    CHECK(j.at("distance").at("lower") == 8);
    CHECK(j.at("distance").at("exact") == true);
}

TEST_CASE("table1 golden check") {
    auto r = run("table1");
    CHECK(r.status == 0);
    auto csv = run("table1 --format csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("n,n1,n2,dg,ht,k,bound\n", 0) == 0);
    CHECK(has(csv.out, "35,5,7,8 9 11 12 13,10,19,20"));
}

TEST_CASE("distance, search and verify subcommands") {
    auto d = run("distance --n 2,3 --rho 2,2 --q 7");
    CHECK(d.status == 0);
    CHECK(has(d.out, "d = 4"));
    auto s = run("search-dg --n 3,5 --rho 2,2 --size 1");
    CHECK(s.status == 0);
    CHECK(has(s.out, "HT 5"));
    auto v = run("verify --n 3,5 --rho 2,2 --method parity-rank");
    CHECK(v.status == 0);
    auto rep = run("repair-demo --n 3,5 --rho 2,2 --dg 7,8 --erase 0");
    CHECK(rep.status == 0);
    CHECK(has(rep.out, "results agree"));
}

TEST_CASE("repair beyond the local distance fails with status 1") {
    auto r = run("repair-demo --n 3,5 --rho 2,2 --erase 0,3,5");
    CHECK(r.status == 1);
}

TEST_CASE("usage and parameter errors exit with status 2") {
    CHECK(run("").status == 2);
    CHECK(run("bogus").status == 2);
    CHECK(run("construct --n 3,6 --rho 2,2").status == 2);
    CHECK(run("construct --n 3,5").status == 2);
    CHECK(run("construct --n 3,5 --rho 2,2 --q 13").status == 2);
    CHECK(run("search-dg --n 3,5 --rho 2,2 --size 2 --cap 3").status == 2);
    CHECK(run("construct --n 3,5 --rho 2,2 --format yaml").status == 2);
}
