#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "doctest.h"
#include "hypervol_cli.hpp"
#include "oracles.hpp"

using nlohmann::json;
using namespace hypervol::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& s) {
    std::vector<json> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) v.push_back(json::parse(line));
    }
    return v;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hypervol_cli_" + name);
}

}  // namespace

TEST_CASE("vol record") {
    const Run r = call({"vol", "sphere", "--x", "1"});
    REQUIRE(r.code == kOk);
    const auto recs = lines(r.out);
    REQUIRE(recs.size() == 1);
    const json& j = recs[0];
    CHECK(j["shape"] == "sphere");
    CHECK(j["params"]["x"].get<double>() == 1.0);
    CHECK(j["k"].get<double>() == 1.0);
    CHECK(j["volume"].get<double>() == doctest::Approx(oracle::kSphere11).epsilon(1e-14));
    CHECK(j.contains("method"));
    CHECK(j.contains("error_estimate"));
}

TEST_CASE("curvature scaling through the command line") {
    for (const char* shape : {"orthoscheme-edges", "cone"}) {
        std::vector<std::string> base = {"vol", shape};
        if (std::string(shape) == "cone") {
            base.insert(base.end(), {"--b", "1", "--beta", "0.7"});
        } else {
            base.insert(base.end(), {"--a", "1", "--b", "0.5", "--c", "0.8"});
        }
        const Run r1 = call(base);
        std::vector<std::string> scaled = {"vol", shape};
        if (std::string(shape) == "cone") {
            scaled.insert(scaled.end(), {"--b", "2", "--beta", "0.7", "--k", "2"});
        } else {
            scaled.insert(scaled.end(), {"--a", "2", "--b", "1", "--c", "1.6", "--k", "2"});
        }
        const Run r2 = call(scaled);
        REQUIRE(r1.code == kOk);
        REQUIRE(r2.code == kOk);
        const double v1 = lines(r1.out)[0]["volume"].get<double>();
        const double v2 = lines(r2.out)[0]["volume"].get<double>();
        CHECK(v2 == doctest::Approx(8.0 * v1).epsilon(1e-10));
    }
}

TEST_CASE("angles in degrees") {
    const Run r = call({"vol", "milnor", "--A", "60", "--B", "60", "--C", "60", "--degrees"});
    REQUIRE(r.code == kOk);
    CHECK(lines(r.out)[0]["volume"].get<double>() == doctest::Approx(oracle::kRegularIdeal).epsilon(1e-13));
}

TEST_CASE("list parameter") {
    const Run r = call({"vol", "ndim-orthoscheme", "--edges", "1,1,1"});
    REQUIRE(r.code == kOk);
    CHECK(lines(r.out)[0]["volume"].get<double>() == doctest::Approx(oracle::kOrtho111).epsilon(1e-8));
}

TEST_CASE("invalid input exits 2") {
    CHECK(call({"vol", "sphere", "--x", "-1"}).code == kInvalid);
    CHECK(call({"vol", "sphere"}).code == kInvalid);
    CHECK(call({"vol", "sphere", "--x", "1", "--y", "2"}).code == kInvalid);
    CHECK(call({"vol", "dodecahedron", "--x", "1"}).code == kInvalid);
    CHECK(call({"vol", "sphere", "--x", "abc"}).code == kInvalid);
    CHECK(call({"vol", "sphere", "--x", "1", "--k", "0"}).code == kInvalid);
    CHECK(call({"vol", "sphere", "--x", "1", "--reltol", "1e-20"}).code == kInvalid);
    CHECK(call({"vol", "ndim-orthoscheme", "--edges", "1,1,1,1,1"}).code == kInvalid);
    CHECK(call({}).code == kInvalid);
    const Run r = call({"vol", "sphere", "--x", "-1"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("convert round trip") {
    const Run fwd = call({"convert", "edges-to-angles", "--a", "1", "--b", "1", "--c", "1"});
    REQUIRE(fwd.code == kOk);
    const json j = lines(fwd.out)[0];
    CHECK(j["alpha"].get<double>() == doctest::Approx(oracle::kAlpha111).epsilon(1e-14));
    CHECK(j["delta"].get<double>() == doctest::Approx(oracle::kDelta111).epsilon(1e-14));
    std::ostringstream a, b, g;
    a.precision(17);
    b.precision(17);
    g.precision(17);
    a << j["alpha"].get<double>();
    b << j["beta"].get<double>();
    g << j["gamma"].get<double>();
    const Run back = call({"convert", "angles-to-edges", "--alpha", a.str(), "--beta", b.str(), "--gamma", g.str()});
    REQUIRE(back.code == kOk);
    const json e = lines(back.out)[0];
    CHECK(e["a"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(e["b"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(e["c"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("not realizable exits 3") {
    CHECK(call({"convert", "angles-to-edges", "--alpha", "1.4", "--beta", "1.5", "--gamma", "1.4"}).code ==
          kNotRealizable);
    CHECK(call({"vol", "orthoscheme-angles", "--alpha", "1.4", "--beta", "1.5", "--gamma", "1.4"}).code ==
          kNotRealizable);
    CHECK(call({"vol", "murakami-yano", "--A", "2", "--B", "2", "--C", "2", "--D", "2", "--E", "2", "--F", "2"})
              .code == kNotRealizable);
}

TEST_CASE("csv output") {
    const Run r = call({"vol", "sphere", "--x", "1", "--format", "csv"});
    REQUIRE(r.code == kOk);
    const auto first_break = r.out.find("\r\n");
    REQUIRE(first_break != std::string::npos);
    const std::string header = r.out.substr(0, first_break);
    CHECK(header == "shape,params,k,volume,method,error_estimate");
    CHECK(r.out.find("x=1") != std::string::npos);
    CHECK(r.out.size() > first_break + 2);
    CHECK(r.out.substr(r.out.size() - 2) == "\r\n");
}

TEST_CASE("output file") {
    const auto path = temp_file("out.jsonl");
    std::filesystem::remove(path);
    const Run r = call({"vol", "sphere", "--x", "1", "--out", path.string()});
    REQUIRE(r.code == kOk);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(lines(content).size() == 1);
    std::filesystem::remove(path);
    CHECK(call({"vol", "sphere", "--x", "1", "--out", "/nonexistent-dir/x.json"}).code == kIoError);
}

TEST_CASE("monte carlo subcommand") {
    const Run r = call({"mc", "sphere", "--x", "1", "--samples", "100000", "--seed", "9"});
    REQUIRE(r.code == kOk);
    const json j = lines(r.out)[0];
    CHECK(j["region"] == "ball");
    CHECK(j["pass"].get<bool>());
    CHECK(std::abs(j["z"].get<double>()) <= 4.0);
    CHECK(j["samples"].get<std::size_t>() == 100000);
    const Run again = call({"mc", "sphere", "--x", "1", "--samples", "100000", "--seed", "9"});
    CHECK(again.out == r.out);
    const Run eq = call({"mc", "equidistant", "--p", "1", "--q", "0.5", "--samples", "100000"});
    REQUIRE(eq.code == kOk);
    CHECK(lines(eq.out)[0]["region"] == "slab");
    CHECK(call({"mc", "milnor", "--A", "1", "--B", "1", "--C", "1.14159"}).code == kInvalid);
    CHECK(call({"mc", "sphere", "--x", "1", "--samples", "100"}).code == kInvalid);
}

TEST_CASE("batch") {
    const auto path = temp_file("jobs.json");
    {
        std::ofstream f(path);
        f << R"([{"shape": "sphere", "x": 1},
                 {"shape": "orthoscheme-edges", "a": 1, "b": 1, "c": 1},
                 {"shape": "ndim-orthoscheme", "edges": [1, 1, 1]},
                 {"shape": "cone", "b": 1, "beta": 0.7853981633974483, "samples": 50000, "seed": 3}])";
    }
    const Run r = call({"batch", path.string()});
    REQUIRE(r.code == kOk);
    const auto recs = lines(r.out);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0]["volume"].get<double>() == doctest::Approx(oracle::kSphere11).epsilon(1e-14));
    CHECK(recs[1]["volume"].get<double>() == doctest::Approx(oracle::kOrtho111).epsilon(1e-10));
    CHECK(recs[3]["region"] == "cone");
    {
        std::ofstream f(path);
        f << R"([{"shape": "sphere", "x": 1}, {"shape": "sphere", "x": -1}])";
    }
    const Run bad = call({"batch", path.string()});
    CHECK(bad.code == kInvalid);
    CHECK(bad.out.empty());
    {
        std::ofstream f(path);
        f << "not json";
    }
    CHECK(call({"batch", path.string()}).code == kInvalid);
    std::filesystem::remove(path);
    CHECK(call({"batch", path.string()}).code == kIoError);
}

TEST_CASE("crosscheck") {
    const Run r = call({"crosscheck", "solids"});
    REQUIRE(r.code == kOk);
    const auto recs = lines(r.out);
    CHECK(recs.size() >= 10);
    for (const json& j : recs) CHECK(j["pass"].get<bool>());
    CHECK(call({"crosscheck", "everything"}).code == kInvalid);
}
