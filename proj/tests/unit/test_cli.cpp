#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "document.hpp"

using namespace trinil;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, {in, out, err});
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& content) {
    const auto dir = fs::temp_directory_path() / "trinil_cli_unit";
    fs::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

}  // namespace

TEST_CASE("decompose then verify, both formats") {
    const std::string matrix = "mod 6 n 2\n1 1\n1 0\n";
    for (const std::string fmt : {"json", "text"}) {
        const auto d = invoke({"decompose", "--format", fmt}, matrix);
        REQUIRE(d.code == cli::kExitOk);
        const auto cert = cli::read_certificate(d.out);
        CHECK(cert.a == MatZ::from_rows({{1, 1}, {1, 0}}, Modulus::make(6)));
        CHECK(cert.e + cert.w == cert.a);
        const auto v = invoke({"verify", scratch("c." + fmt, d.out).string()});
        CHECK(v.code == cli::kExitOk);
        CHECK(v.out == "ok\n");
    }
}

TEST_CASE("JSON matrix documents and --mod override") {
    const std::string doc = R"({"m": 12, "n": 2, "entries": [1, -1, 25, 4]})";
    const auto d = invoke({"decompose"}, doc);
    REQUIRE(d.code == 0);
    const auto j = nlohmann::json::parse(d.out);
    CHECK(j["A"] == nlohmann::json::array({1, 11, 1, 4}));
    CHECK(j["m"] == 12);

    const auto over = invoke({"decompose", "--mod", "36"}, "n 2\n1 2\n3 4\n");
    CHECK(over.code == 0);
    CHECK(nlohmann::json::parse(over.out)["m"] == 36);
}

TEST_CASE("exit codes") {
    const auto inadmissible = invoke({"decompose", "--mod", "10"}, "mod 6 n 2\n1 1\n1 0\n");
    CHECK(inadmissible.code == cli::kExitInadmissible);
    CHECK(inadmissible.err.find('5') != std::string::npos);

    CHECK(invoke({"decompose"}, "mod 6 n 2\n1 1 1\n").code == cli::kExitParseError);
    CHECK(invoke({"decompose"}, "mod 6 n 2\n1 x 1 1\n").code == cli::kExitParseError);
    CHECK(invoke({"decompose"}, "n 2\n1 1 1 1\n").code == cli::kExitParseError);
    CHECK(invoke({"decompose"}, R"({"m": 6, "n": 2, "entries": [1, 2]})").code == cli::kExitParseError);
    CHECK(invoke({"decompose", "/nonexistent/file"}).code == cli::kExitParseError);
    CHECK(invoke({"frobnicate"}).code == cli::kExitParseError);
    CHECK(invoke({"--help"}).code == cli::kExitOk);

    // x^4 + x + 1 over GF(2) needs the random fallback; a zero-ish budget exhausts it.
    int exhausted = 0;
    for (int seed = 0; seed < 10; ++seed) {
        const auto r = invoke({"decompose", "--budget", "1", "--seed", std::to_string(seed)},
                              "mod 2 n 4\n0 0 0 1\n1 0 0 1\n0 1 0 0\n0 0 1 0\n");
        if (r.code == cli::kExitBudgetExhausted) ++exhausted;
        CHECK((r.code == cli::kExitOk || r.code == cli::kExitBudgetExhausted));
    }
    CHECK(exhausted > 0);
}

TEST_CASE("verify reports corruption and truncation") {
    const auto d = invoke({"decompose"}, "mod 12 n 3\n1 2 3\n4 5 6\n7 8 9\n");
    REQUIRE(d.code == 0);
    auto j = nlohmann::json::parse(d.out);

    auto bumped = j;
    bumped["E"][0] = (j["E"][0].get<int>() + 1) % 12;
    const auto v = invoke({"verify", scratch("bumped.json", bumped.dump()).string()});
    CHECK(v.code == cli::kExitVerificationFailed);
    CHECK((v.out.find("sum_ok") != std::string::npos || v.out.find("tripotent_ok") != std::string::npos));

    const auto truncated = invoke({"verify", scratch("trunc.json", d.out.substr(0, d.out.size() / 2)).string()});
    CHECK(truncated.code == cli::kExitParseError);

    const auto t = invoke({"decompose", "--format", "text"}, "mod 12 n 3\n1 2 3\n4 5 6\n7 8 9\n");
    CHECK(invoke({"verify", "-"}, t.out.substr(0, t.out.size() - 6)).code == cli::kExitParseError);
    CHECK(invoke({"verify"}, t.out).code == cli::kExitOk);
}

TEST_CASE("byte-identical output under a fixed seed") {
    const std::string m = "mod 72 n 6\n1 2 3 4 5 6\n7 8 9 10 11 12\n0 1 0 1 0 1\n5 5 5 5 5 5\n3 0 3 0 3 0\n1 1 2 3 5 8\n";
    CHECK(invoke({"decompose", "--seed", "4"}, m).out == invoke({"decompose", "--seed", "4"}, m).out);
    CHECK(invoke({"decompose", "--format", "text"}, m).out == invoke({"decompose", "--format", "text"}, m).out);
}

TEST_CASE("seed defaults from the environment") {
    const std::string m = "mod 6 n 2\n1 1\n1 0\n";
    ::setenv(cli::kSeedEnv, "42", 1);
    const auto d = invoke({"decompose"}, m);
    CHECK(nlohmann::json::parse(d.out)["seed"] == 42);
    CHECK(nlohmann::json::parse(invoke({"decompose", "--seed", "3"}, m).out)["seed"] == 3);
    ::setenv(cli::kSeedEnv, "not-a-number", 1);
    CHECK(invoke({"decompose"}, m).code == cli::kExitParseError);
    ::unsetenv(cli::kSeedEnv);
}

TEST_CASE("classify") {
    const auto r12 = invoke({"classify", "--mod", "12", "--json"});
    REQUIRE(r12.code == 0);
    CHECK(nlohmann::json::parse(r12.out)["trinil_clean"] == true);

    const auto r5 = invoke({"classify", "--mod", "5", "--json"});
    const auto j5 = nlohmann::json::parse(r5.out);
    CHECK(j5["trinil_clean"] == false);
    CHECK(j5["witness"]["trinil_clean"] == 2);

    const auto text = invoke({"classify", "--mod", "5"});
    CHECK(text.out.find("trinil_clean:         false (witness 2)") != std::string::npos);

    const auto sweep = invoke({"classify", "--sweep", "50", "--json"});
    REQUIRE(sweep.code == 0);
    const auto js = nlohmann::json::parse(sweep.out);
    CHECK(js["mismatches"] == 0);
    CHECK(js["rows"].size() == 49);

    CHECK(invoke({"classify"}).code == cli::kExitParseError);
    CHECK(invoke({"classify", "--mod", "12", "--sweep", "5"}).code == cli::kExitParseError);
    CHECK(invoke({"classify", "--sweep", "20000"}).code == cli::kExitParseError);
    CHECK(invoke({"classify", "--mod", "1"}).code == cli::kExitParseError);
}

TEST_CASE("reproduce") {
    const auto r = invoke({"reproduce"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    const auto j = invoke({"reproduce", "--json"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["all_passed"] == true);
    CHECK(invoke({"reproduce", "--inject-fault"}).code == cli::kExitVerificationFailed);
}
