#include "lmhs/cli.hpp"
#include "lmhs/json_io.hpp"
#include "lmhs/weight_ss.hpp"

#include <doctest.h>

#include <sstream>

using namespace lmhs;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name)
{
    return std::string(LMHS_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("limit json for the triangle degeneration")
    {
        const auto r = run({"limit", "--n", "2", "--degrees", "1,1,1", "--json"});
        REQUIRE(r.code == cli::kExitOk);
        const auto doc = Json::parse(r.out);
        CHECK(doc["n"] == 2);
        CHECK(doc["d0"] == 3);
        CHECK(doc["jordan"] == Json{{"2", 1}});
        CHECK(doc["primitives"]["1"] == Json::parse(R"([{"kind":"tate","mult":1,"twist":1}])"));
        CHECK(doc["prim_dim"] == "2");
    }

    TEST_CASE("json output round-trips byte for byte")
    {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"limit", "--n", "4", "--degrees", "1,1,1,1,1", "--json", "--full"},
                 {"e1", "--n", "3", "--degrees", "1,2,2", "--json", "--trace"},
                 {"pencil", "--n", "3", "--d1", "1", "--d2", "2", "--json"},
                 {"sweep", "--suite", "koszul", "--json"}}) {
            const auto r = run(args);
            REQUIRE(r.code == cli::kExitOk);
            const auto doc = Json::parse(r.out);
            CHECK(doc.dump(2) + "\n" == r.out);
        }
    }

    TEST_CASE("table and json modes report the same numbers")
    {
        const auto js = run({"e1", "--n", "3", "--degrees", "1,2", "--json"});
        const auto tx = run({"e1", "--n", "3", "--degrees", "1,2"});
        REQUIRE(js.code == 0);
        REQUIRE(tx.code == 0);
        std::istringstream lines(tx.out);
        std::string header, line;
        std::getline(lines, header);
        std::vector<std::string> from_text;
        while (std::getline(lines, line)) {
            std::istringstream f(line);
            std::string i, j, w, d;
            f >> i >> j >> w >> d;
            from_text.push_back(i + "," + j + "," + w + "," + d);
        }
        std::vector<std::string> from_json;
        const auto doc = Json::parse(js.out);
        for (const auto& c : doc["cells"])
            from_json.push_back(std::to_string(c["i"].get<int>()) + "," + std::to_string(c["j"].get<int>()) + ","
                                + std::to_string(c["weight"].get<int>()) + "," + c["dim"].get<std::string>());
        CHECK(from_text == from_json);
        CHECK(!from_json.empty());
    }

    TEST_CASE("exit codes")
    {
        CHECK(run({"verify-eq04", "--n", "3", "--degrees", "1,2,3"}).code == cli::kExitOk);
        CHECK(run({"koszul-euler", "--n", "3", "--r", "4", "--k", "0"}).code == cli::kExitOk);
        CHECK(run({"hodge", "--n", "4", "--d", "5"}).code == cli::kExitOk);
        CHECK(run({"pencil", "--n", "2", "--d1", "1", "--d2", "1"}).code == cli::kExitOk);
        CHECK(run({"--help"}).code == cli::kExitOk);

        CHECK(run({}).code == cli::kExitUsage);
        CHECK(run({"limit", "--bogus"}).code == cli::kExitUsage);
        CHECK(run({"limit", "--n", "2"}).code == cli::kExitUsage);
        CHECK(run({"limit", "--n", "1", "--degrees", "1,1"}).code == cli::kExitUsage);
        CHECK(run({"limit", "--n", "2", "--degrees", "1,x"}).code == cli::kExitUsage);
        CHECK(run({"e1", "--n", "2"}).code == cli::kExitUsage);
        CHECK(run({"sweep", "--suite", "nope"}).code == cli::kExitUsage);
        CHECK(run({"koszul", "--r", "3", "--p", "2", "--q", "1"}).code == cli::kExitUsage);
        CHECK(run({"koszul-euler", "--n", "3", "--r", "4", "--k", "-1"}).code == cli::kExitUsage);

        const auto bad = run({"limit", "--n", "2", "--degrees", "0,1"});
        CHECK(bad.err.find("usage error") != std::string::npos);
    }

    TEST_CASE("e1 from a table file")
    {
        const auto from_file = run({"e1", "--table", data("p3_degrees_1_2.json"), "--json"});
        REQUIRE(from_file.code == cli::kExitOk);
        const auto geometric = run({"e1", "--n", "3", "--degrees", "1,2", "--json"});
        auto a = Json::parse(from_file.out)["cells"];
        auto b = Json::parse(geometric.out)["cells"];
        REQUIRE(a.size() == b.size());
        for (std::size_t c = 0; c < a.size(); ++c) {
            CHECK(a[c]["i"] == b[c]["i"]);
            CHECK(a[c]["j"] == b[c]["j"]);
            CHECK(a[c]["dim"] == b[c]["dim"]);
        }
    }

    TEST_CASE("table file errors")
    {
        const auto missing = run({"e1", "--table", data("missing_entry.json")});
        CHECK(missing.code == cli::kExitUsage);
        CHECK(missing.err.find("(|I|=2, j=1)") != std::string::npos);
        CHECK(run({"e1", "--table", data("does_not_exist.json")}).code == cli::kExitUsage);
        CHECK(run({"e1", "--table", data("p3_degrees_1_2.json"), "--n", "3"}).code == cli::kExitUsage);
    }

    TEST_CASE("table json round trip")
    {
        const DegenerationInput in(4, {1, 2, 3});
        const auto t = CohomologyTable::from_projective_space(in);
        const auto back = table_from_json(Json::parse(table_to_json(t).dump()));
        CHECK(back.n == t.n);
        CHECK(back.yi == t.yi);
        CHECK(back.ypi == t.ypi);
        CHECK_THROWS_AS(table_from_json(Json::parse(R"({"n":3})")), std::invalid_argument);
        CHECK_THROWS_AS(table_from_json(Json::parse(R"({"n":3,"r":2,"YI":{"1":{"0":-4}}})")), std::invalid_argument);
        CHECK_THROWS_AS(table_from_json(Json::parse(R"({"n":3,"r":2,"YI":{"a":{}}})")), std::invalid_argument);
    }
}
