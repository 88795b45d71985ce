#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "grundy/cli.hpp"

using grundy::cli::dispatch;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;

    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = dispatch(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "cli_test_" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("grundy on an edge-list P5") {
        const std::string path = write_temp("p5.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n");
        const Run r = run({"grundy", "--format", "edgelist", path});
        CHECK(r.code == 0);
        const json j = r.report();
        CHECK(j["schema"] == 1);
        CHECK(j["gamma"] == 3);
        CHECK(j.contains("states_explored"));
        CHECK_FALSE(j.contains("classes"));
        CHECK_FALSE(j.contains("runtime_ms"));
        std::remove(path.c_str());
    }

    TEST_CASE("certificate and timing flags") {
        const Run r = run({"--timing", "grundy", "--graph6", "EhEG", "--certificate"});
        CHECK(r.code == 0);
        const json j = r.report();
        CHECK(j["classes"].size() == 3);
        CHECK(j.contains("runtime_ms"));
    }

    TEST_CASE("recognize rejects C5 with a witness") {
        const std::string path = write_temp("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
        const Run r = run({"recognize", path});
        CHECK(r.code == 1);
        const json j = r.report();
        CHECK(j["accepted"] == false);
        CHECK(j["witness"]["name"] == "C5");
        CHECK(j["witness"]["vertices"] == json::array({0, 1, 2, 3, 4}));
        std::remove(path.c_str());
    }

    TEST_CASE("recognize accepts C6 and reports the decomposition") {
        const Run r = run({"recognize", "--graph6", "EhEG"});
        CHECK(r.code == 0);
        const json j = r.report();
        CHECK(j["accepted"] == true);
        CHECK(j["coloring"].size() == 6);
        CHECK(j["tree"].contains("label"));
        CHECK(j["witness"].is_null());
    }

    TEST_CASE("graph6 chosen by extension") {
        const std::string path = write_temp("c6.g6", "EhEG\n");
        CHECK(run({"recognize", path}).code == 0);
        std::remove(path.c_str());
    }

    TEST_CASE("grundy on a non-Cameron graph is a domain rejection") {
        const Run r = run({"grundy", "--graph6", "Dhc"});
        CHECK(r.code == 1);
        CHECK(r.report()["witness"]["name"] == "C5");
    }

    TEST_CASE("marriage") {
        const Run r = run({"marriage", "--villages", "1,0 0,1"});
        CHECK(r.code == 0);
        const json j = r.report();
        CHECK(j["marriages"] == 1);
        CHECK(j["population"] == 2);
        CHECK(run({"marriage", "--villages", "1;0"}).code == 2);
        CHECK(run({"marriage", "--villages", "0,0"}).code == 1);
    }

    TEST_CASE("oracle") {
        const Run r = run({"oracle", "--graph6", "Ch"});
        CHECK(r.code == 0);
        CHECK(r.report()["gamma"] == 3);
        CHECK(r.report()["exponential"] == true);
        CHECK(run({"oracle", "--graph6", "L?????????????"}).code == 1);  // 13 vertices
    }

    TEST_CASE("switch with triples") {
        const Run r = run({"switch", "--graph6", "A_", "--set", "0", "--triples"});
        CHECK(r.code == 0);
        const json j = r.report();
        CHECK(j["graph6"] == "A?");
        CHECK(j["triples"].empty());
        CHECK(run({"switch", "--graph6", "A_", "--set", "5"}).code == 2);
    }

    TEST_CASE("gen echoes the seed and is deterministic") {
        const Run a = run({"gen", "--kind", "cameron", "-n", "12", "--seed", "42"});
        const Run b = run({"gen", "--kind", "cameron", "-n", "12", "--seed", "42"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.report()["seed"] == 42);
        CHECK(a.report()["prng"] == "mt19937_64");
        const Run text = run({"gen", "--kind", "path", "-n", "4", "--text"});
        CHECK(text.out == "Ch\n");
        CHECK(run({"gen", "-n", "63"}).code == 1);
    }

    TEST_CASE("reports are byte-identical across runs") {
        const std::vector<std::string> args{"grundy", "--graph6", "EhEG", "--certificate"};
        CHECK(run(args).out == run(args).out);
    }

    TEST_CASE("usage errors exit with 2") {
        CHECK(run({}).code == 2);
        CHECK(run({"bogus"}).code == 2);
        CHECK(run({"grundy", "--graph6", "Ch", "--frobnicate"}).code == 2);
        CHECK(run({"grundy"}).code == 2);
        CHECK(run({"grundy", "--graph6", "D h"}).code == 2);
        CHECK(run({"grundy", "no-such-file.txt"}).code == 2);
        CHECK(run({"grundy", "--format", "sparse6", "--graph6", "Ch"}).code == 2);
    }

    TEST_CASE("internal errors exit with 3") {
        const Run r = run({"grundy", "--graph6", "E}GG"});
        CHECK(r.code == 3);
        CHECK(r.err.find("internal error") != std::string::npos);
    }

    TEST_CASE("text output") {
        const Run r = run({"--text", "marriage", "--villages", "1,1"});
        CHECK(r.code == 0);
        CHECK(r.out.find("marriages: 0") != std::string::npos);
    }

    TEST_CASE("selftest report") {
        const Run r = run({"selftest", "--only", "7", "--seed", "5"});
        CHECK(r.code == 0);
        const json j = r.report();
        CHECK(j["seed"] == 5);
        REQUIRE(j["criteria"].size() == 1);
        CHECK(j["criteria"][0]["id"] == 7);
        CHECK(j["criteria"][0]["passed"] == true);
        CHECK(run({"selftest", "--only", "11"}).code == 2);
    }

    TEST_CASE("help") {
        const Run r = run({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("selftest") != std::string::npos);
    }
}
