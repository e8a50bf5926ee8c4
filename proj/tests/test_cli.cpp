#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Run {
    int code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("skewrep_cli_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p.parent_path());
    return p;
}

Run run(const std::string& args, const std::string& env = "") {
    const auto err_file = scratch("stderr.txt");
    const std::string cmd = "env -u SKEWREP_CACHE_DIR " + (env.empty() ? "" : env + " ") + SKEWREP_CLI_PATH + " " + args +
                            " 2>" + err_file.string();
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_file);
    return r;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

json payload_of(const Run& r) { return json::parse(r.out).at("payload"); }

bool all_checks_pass(const json& list) {
    for (const auto& c : list)
        if (!c.at("pass").get<bool>()) return false;
    return !list.empty();
}

} // namespace

TEST_CASE("enumerate", "[cli]") {
    auto r = run("enumerate --m 1 --n 1 --lambda 1,0");
    REQUIRE(r.code == 0);
    auto env = json::parse(r.out);
    REQUIRE(env["artifact"] == "skewrep");
    REQUIRE(env["status"] == "pass");
    REQUIRE(env["config"]["shape"]["lambda"] == json::array({1, 0}));
    REQUIRE(env["config"]["seed"].get<std::uint64_t>() == 0x5eed2024ULL);
    auto p = env["payload"];
    REQUIRE(p["count"] == 2);
    REQUIRE(p["tableaux"].size() == 2);
    REQUIRE(p["tableaux"][0]["rows"] == json::parse("[[], [1], [1, 0]]"));
    REQUIRE(p["ssyt_count"] == 2);
}

TEST_CASE("matrices and currents", "[cli]") {
    auto m = run("matrices --m 2 --n 1 --lambda 1,0,0");
    REQUIRE(m.code == 0);
    auto p = payload_of(m);
    REQUIRE(p["dim"] == 3);
    REQUIRE(all_checks_pass(p["relations"]));
    // rational entries are strings
    REQUIRE(p["e"][0][0][2].is_string());

    auto c = run("currents --m 1 --n 1 --lambda 1,0");
    REQUIRE(c.code == 0);
    auto q = payload_of(c);
    REQUIRE(q["dim"] == 2);
    REQUIRE(q["d"][0][0].contains("num"));
    REQUIRE(q["x_plus"][0].size() == 1);
}

TEST_CASE("verify reports every check as passing", "[cli]") {
    auto r = run("verify --m 1 --n 1 --lambda 1,0");
    REQUIRE(r.code == 0);
    auto env = json::parse(r.out);
    REQUIRE(env["status"] == "pass");
    auto p = env["payload"];
    REQUIRE(all_checks_pass(p["drinfeld_relations"]));
    REQUIRE(all_checks_pass(p["superalgebra_relations"]));
    REQUIRE(p["central_series"]["result"] == "pass");
    REQUIRE(p["thin"] == "pass");
    REQUIRE(p["irreducible"]["result"] == "pass");
    REQUIRE(p["oracle"]["result"] == "pass");
}

TEST_CASE("qchar", "[cli]") {
    auto p = payload_of(run("qchar --m 1 --n 2 --lambda 2,1,0"));
    REQUIRE(p["thin"] == true);
    std::size_t total = 0;
    for (const auto& e : p["qchar"]) total += e["multiplicity"].get<std::size_t>();
    REQUIRE(total == p["dim"].get<std::size_t>());
}

TEST_CASE("gl11 example", "[cli]") {
    auto r = run(R"(gl11 --spec '[["3","0"],["-1","0"]]')");
    REQUIRE(r.code == 0);
    auto p = payload_of(r);
    REQUIRE(p["dim"] == 4);
    REQUIRE(p["thin"] == true);
    REQUIRE(p["tame"] == true);
    REQUIRE(p["witness"].is_null());
    REQUIRE(p["restricted_highest_weights"].size() == 2);

    // double root of phi
    auto d = payload_of(run(R"(gl11 --spec '[["1/2","0"],["1/2","1"]]')"));
    REQUIRE(d["thin"] == false);
    REQUIRE(d["tame"] == false);
    REQUIRE(d["witness"].is_string());
}

TEST_CASE("quantum", "[cli]") {
    auto r = run("quantum --m 1 --n 1 --lambda 2,0 --window 3");
    REQUIRE(r.code == 0);
    auto p = payload_of(r);
    REQUIRE(all_checks_pass(p["current_relations"]));
    REQUIRE(all_checks_pass(p["uq_relations"]));
    REQUIRE(all_checks_pass(p["classical_limit"]));
    REQUIRE(all_checks_pass(p["yang_baxter"]));
    REQUIRE(p["oracle"]["result"] == "pass");
    // q(1 - u q^{-2}) ... : Q(q) coefficients carry a qshift
    REQUIRE(p["currents"]["d"][0][0]["num"][0].contains("qshift"));
}

TEST_CASE("repeated runs are byte-identical", "[cli]") {
    for (const std::string args : {"verify --m 2 --n 1 --lambda 2,1,0 --seed 7", "quantum --m 1 --n 2 --lambda 1,0,0 --seed 7",
                                   R"(gl11 --spec '[["2","0"],["2","1"]]')", "qchar --m 2 --n 1 --r 1 --lambda 2,1,0,0 --mu 1"}) {
        INFO(args);
        auto a = run(args), b = run(args);
        REQUIRE(a.code == 0);
        REQUIRE(a.out == b.out);
    }
    // the seed is echoed and changes nothing but the echo for exact checks
    auto s1 = json::parse(run("verify --m 1 --n 1 --lambda 1,0 --seed 1").out);
    REQUIRE(s1["config"]["seed"] == 1);
}

TEST_CASE("cache hits reproduce cold runs", "[cli]") {
    const auto dir = scratch("cache");
    for (const std::string cmd : {"currents --m 2 --n 1 --lambda 2,1,0", "quantum --m 1 --n 1 --lambda 1,0"}) {
        INFO(cmd);
        auto cold = run(cmd);
        auto miss = run(cmd + " --cache-dir " + dir.string());
        REQUIRE(fs::exists(dir));
        auto hit = run(cmd + " --cache-dir " + dir.string());
        REQUIRE(cold.code == 0);
        REQUIRE(fnv1a(payload_of(cold).dump()) == fnv1a(payload_of(miss).dump()));
        REQUIRE(fnv1a(payload_of(cold).dump()) == fnv1a(payload_of(hit).dump()));
        REQUIRE(cold.out == hit.out);
    }
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        ++files;
        REQUIRE(e.path().extension() == ".json");
        REQUIRE(e.path().filename().string().find(".tmp") == std::string::npos);
    }
    REQUIRE(files == 2);
}

TEST_CASE("stale or corrupt cache entries are recomputed", "[cli]") {
    const auto dir = scratch("stale");
    const std::string cmd = "currents --m 1 --n 1 --lambda 2,0 --cache-dir " + dir.string();
    auto first = run(cmd);
    fs::path entry;
    for (const auto& e : fs::directory_iterator(dir)) entry = e.path();
    REQUIRE(!entry.empty());

    auto j = json::parse(slurp(entry));
    j["format"] = 0;
    j["payload"]["dim"] = 99;
    std::ofstream(entry) << j.dump();
    auto second = run(cmd);
    REQUIRE(second.out == first.out);
    REQUIRE(json::parse(slurp(entry))["format"] == 1);

    std::ofstream(entry) << "{\"format\": 1, \"key\": ";
    REQUIRE(run(cmd).out == first.out);
}

TEST_CASE("cache directory from the environment", "[cli]") {
    const auto dir = scratch("envcache");
    auto r = run("currents --m 1 --n 1 --lambda 1,0", "SKEWREP_CACHE_DIR=" + dir.string());
    REQUIRE(r.code == 0);
    REQUIRE(fs::exists(dir));
    REQUIRE(!fs::is_empty(dir));
}

TEST_CASE("output file, table format and timing", "[cli]") {
    const auto out = scratch("out.json");
    auto r = run("enumerate --m 1 --n 1 --lambda 2,0 --output " + out.string());
    REQUIRE(r.code == 0);
    REQUIRE(r.out.empty());
    REQUIRE(slurp(out) == run("enumerate --m 1 --n 1 --lambda 2,0").out);

    auto t = run("verify --m 1 --n 1 --lambda 1,0 --format table");
    REQUIRE(t.code == 0);
    REQUIRE(t.out.find("status: pass") != std::string::npos);
    REQUIRE(t.out.find("PASS  ") != std::string::npos);

    REQUIRE(!json::parse(run("enumerate --m 1 --n 1 --lambda 1,0").out).contains("timing"));
    REQUIRE(json::parse(run("enumerate --m 1 --n 1 --lambda 1,0 --timing").out).contains("timing"));
}

TEST_CASE("bad input exits with status 2", "[cli]") {
    auto zero = run("enumerate --m 1 --n 1 --lambda 0,1");
    REQUIRE(zero.code == 2);
    REQUIRE(zero.err.find("lambda") != std::string::npos);
    REQUIRE(zero.out.empty());

    REQUIRE(run("enumerate --m 1 --n 1 --lambda 1").code == 2);
    REQUIRE(run("enumerate --m 1 --n 1 --lambda 1,x").code == 2);
    REQUIRE(run("enumerate --m 1 --n 1").code == 2);
    REQUIRE(run("transmogrify --m 1").code == 2);
    REQUIRE(run("enumerate --m 1 --n 1 --lambda 1,0 --format xml").code == 2);
    REQUIRE(run("gl11 --spec '[[1,0],[2'").code == 2);
    REQUIRE(run("gl11 --spec '[[1,0,3]]'").code == 2);
    REQUIRE(run("gl11 --spec '[[\"1/0\",0]]'").code == 2);

    auto bad = run("gl11 --spec '[[\"2\",\"0\"],[\"1\",\"-2\"]]'");
    REQUIRE(bad.code == 2);
    REQUIRE(!bad.err.empty());
}
