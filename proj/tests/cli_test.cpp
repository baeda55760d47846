#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(HYPERINC_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = ::pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(HYPERINC_DATA) + "/" + name; }

nlohmann::ordered_json json_of(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("rank") {
    const auto r = run("rank --json " + data("unit_example.txt"));
    REQUIRE(r.status == 0);
    const auto j = json_of(r);
    CHECK(j["rank"] == 5);
    CHECK(j["nullity"] == 6);
    CHECK(j["ok"] == true);

    CHECK(run("rank " + data("unit_example.txt")).out.find("rank B_H: 5") != std::string::npos);

    const auto single = run("rank --json " + data("k4.txt"));
    CHECK(json_of(single)["rank"] == 4);
}

TEST_CASE("generate") {
    const auto c = run("generate cycle 8 4");
    REQUIRE(c.status == 0);
    CHECK(c.out.find("e0: 0 1 2 3\n") != std::string::npos);
    CHECK(c.out.find("e7: 0 1 2 7\n") != std::string::npos);
    const auto a = run("generate random 10 6 4 --seed 7");
    const auto b = run("generate random 10 6 4 --seed 7");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != run("generate random 10 6 4 --seed 8").out);
    CHECK(run("generate cycle 3 4").status == 2);
    CHECK(run("generate random 3 20 2").status == 2);
    const auto j = run("generate cycle 5 2 --json");
    CHECK(json_of(j)["edges"]["e4"] == nlohmann::ordered_json::array({"0", "4"}));
}

TEST_CASE("units and contract") {
    const auto u = run("units --json " + data("unit_example.txt"));
    REQUIRE(u.status == 0);
    const auto j = json_of(u);
    CHECK(j["units"].size() == 6);
    CHECK(j["units"][4]["members"] == nlohmann::ordered_json::array({"10"}));
    CHECK(j["units"][4]["generator"] == nlohmann::ordered_json::array({"e1", "e3", "e5"}));
    CHECK(j["nullity"]["decomposition_holds"] == true);

    const auto c = json_of(run("contract --json " + data("unit_example.txt")));
    CHECK(c["contracted"]["edges"].size() == 5);
    CHECK(c["nullity"]["rank"] == 5);
    CHECK(c["nullity"]["contraction_rank"] == 5);

    const auto k = json_of(run("contract --json " + data("k4.txt")));
    CHECK(k["isomorphic_to_original"] == true);
}

TEST_CASE("verify") {
    const auto ok = run("verify --json " + data("equal_partition.json") + " " + data("certs_equal.json"));
    CHECK(ok.status == 0);
    CHECK(json_of(ok)["certificates"][0]["valid"] == true);

    const auto overlap = run("verify --json " + data("equal_partition.json") + " " + data("certs_overlap.json"));
    CHECK(overlap.status == 2);
    CHECK(json_of(overlap)["error"]["code"] == "OverlappingSets");

    const auto mixed = run("verify --json " + data("general.txt") + " " + data("certs_general.json"));
    CHECK(mixed.status == 1);
    const auto j = json_of(mixed);
    CHECK(j["certificates"][0]["valid"] == true);
    CHECK(j["certificates"][1]["valid"] == false);
    CHECK(j["failures"].size() == 1);
}

TEST_CASE("find") {
    const auto r = run("find --json " + data("k4.txt") + " --kind RatioVertexPartition");
    REQUIRE(r.status == 0);
    bool matching = false;
    const auto j = json_of(r);
    for (const auto& c : j["certificates"])
        if (c["sets"]["E"] == nlohmann::ordered_json::array({"e1", "e2"}) && c["ratio"] == "1/2") matching = true;
    CHECK(matching);
    CHECK(run("find " + data("unit_example.txt") + " --kind EqualEdgePartition --max-size 8").status == 2);
    CHECK(run("find " + data("k4.txt") + " --kind Bogus").status == 2);
}

TEST_CASE("spectra") {
    const auto u = json_of(run("spectra --json " + data("unit_example.txt")));
    REQUIRE(u["unit_eigenpairs_summary"].size() == 1);
    CHECK(u["unit_eigenpairs_summary"][0]["eigenvalue"] == "-2");
    CHECK(u["unit_eigenpairs_summary"][0]["multiplicity_lower_bound"] == 5);

    const auto b = run("spectra --json --weighting banerjee --matrix " + data("unit_example.txt"));
    REQUIRE(b.status == 0);
    const auto bj = json_of(b);
    std::vector<std::string> values;
    for (const auto& p : bj["unit_eigenpairs"]) {
        values.push_back(p["eigenvalue"]);
        CHECK(p["verified"] == true);
    }
    CHECK(values == std::vector<std::string>{"-1/2", "-5/6", "-5/12", "-7/12"});
    CHECK(bj["adjacency"]["entries"][0][1] == "1/2");

    const auto w = json_of(run("spectra --json --weighting " + data("equal_weights.json") + " " + data("adjacency.txt")));
    REQUIRE(w["class_eigenpairs"].size() == 1);
    CHECK(w["class_eigenpairs"][0]["eigenvalue"] == "-2/3");
    CHECK(w["class_eigenpairs"][0]["multiplicity_lower_bound"] == 2);

    const auto bad = run("spectra --json --weighting " + data("bad_weights.txt") + " " + data("adjacency.txt"));
    CHECK(bad.status == 2);
    CHECK(json_of(bad)["error"]["code"] == "BadWeightFile");
}

TEST_CASE("usage errors") {
    CHECK(run("").status == 2);
    CHECK(run("rank /nonexistent/file").status == 2);
    CHECK(run("rank --help").status == 0);
}
