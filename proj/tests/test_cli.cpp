#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "../tools/cli.hpp"
#include "nearcentral/serialization.hpp"

namespace fs = std::filesystem;
using nearcentral::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = nearcentral::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        result.push_back(line);
    }
    return result;
}

}  // namespace

TEST_CASE("genus-table") {
    const auto r = run({"genus-table", "--n", "6", "--p", "2"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "n,p,g,count");
    CHECK(rows[1] == "6,2,0,0");
    CHECK(rows[2] == "6,2,1,4");
    CHECK(rows[3] == "6,2,2,20");

    const auto j = Json::parse(run({"genus-table", "--n", "8", "--p", "3", "--format", "json"}).out);
    CHECK(j.at("total") == 720);
    long sum = 0;
    for (const auto& row : j.at("genus")) {
        sum += row.at("count").get<long>();
    }
    CHECK(sum == 720);

    const auto both = run({"genus-table", "--n", "7", "--p", "4", "--method", "both"});
    CHECK(both.code == 0);
}

TEST_CASE("face-table") {
    const auto r = run({"face-table", "--n", "5", "--p", "2", "--method", "both", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.dump().find("shape") != std::string::npos);
}

TEST_CASE("genchar") {
    const auto r = run({"genchar", "--rho", "2,2", "--ell", "2", "--mu", "3,1", "--j", "1", "--format", "csv"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == "method,value");
    for (std::size_t k = 1; k < rows.size(); ++k) {
        CHECK(rows[k].substr(rows[k].rfind(',') + 1) == "-1");
    }
    const auto other = run({"genchar", "--rho", "3,1", "--ell", "1", "--mu", "2,2", "--j", "2", "--format", "json"});
    CHECK(other.code == 0);
    CHECK(other.out.find("\"-1/3\"") != std::string::npos);
    CHECK(run({"genchar", "--rho", "3,1", "--ell", "2", "--mu", "2,2", "--j", "2"}).code == 2);
    CHECK(run({"genchar", "--rho", "3,1", "--ell", "1", "--mu", "2,2,1", "--j", "2"}).code == 2);
}

TEST_CASE("connection and decompose") {
    const auto c = run({"connection", "--lambda", "2,1", "--i", "1", "--mu", "2,1", "--j", "2", "--method", "both"});
    CHECK(c.code == 0);
    CHECK(lines(c.out).at(0) == "shape,tag,c");
    CHECK(c.out.find("3,3,1") != std::string::npos);

    const auto d = run({"decompose", "--lambda", "2,1", "--i", "1", "--mu", "2,1", "--j", "2", "--method", "both"});
    CHECK(d.code == 0);
    const auto t = run({"decompose", "--n", "4", "--method", "both", "--format", "json"});
    CHECK(t.code == 0);
    CHECK_NOTHROW((void)Json::parse(t.out));
    CHECK(run({"decompose", "--lambda", "2,1", "--i", "1"}).code == 2);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"genus-table", "--n", "6"}).code == 2);
    CHECK(run({"genus-table", "--n", "6", "--p", "2", "--format", "xml"}).code == 2);
    CHECK(run({"genus-table", "--n", "6", "--p", "9"}).code == 2);
    CHECK(run({"genus-table", "--n", "6", "--p", "2", "--jobs", "0"}).code == 2);
    const auto refused = run({"genus-table", "--n", "10", "--p", "2", "--method", "brute"});
    CHECK(refused.code == 3);
    CHECK_FALSE(refused.err.empty());
    CHECK(run({"decompose", "--n", "10", "--method", "brute"}).code == 3);
    CHECK(run({"decompose", "--n", "7", "--method", "brute", "--max-brute-n", "6"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("symmetry and verify") {
    const auto s = run({"symmetry", "--n-max", "12", "--witness-n", "7"});
    CHECK(s.code == 0);
    CHECK(s.out.find("false") == std::string::npos);

    const auto v = run({"verify", "--suite", "decompositions", "--n-max", "5", "--format", "json"});
    CHECK(v.code == 0);
    const auto j = Json::parse(v.out);
    CHECK(j.dump().find("decompositions") != std::string::npos);

    // The second branch of D_{n,p} disagrees with the first at p = n/2.
    CHECK(run({"verify", "--suite", "identities", "--n-max", "4"}).code == 1);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"face-table", "--n", "6", "--p", "3", "--format", "json", "--jobs", "3"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    auto serial = args;
    serial.back() = "1";
    CHECK(run(serial).out == a.out);

    const fs::path file = fs::temp_directory_path() / ("nearcentral-cli-" + std::to_string(::getpid()) + ".json");
    auto to_file = args;
    to_file.insert(to_file.end(), {"--output", file.string()});
    const auto written = run(to_file);
    CHECK(written.code == 0);
    CHECK(written.out.empty());
    std::ifstream in(file);
    const std::string contents((std::istreambuf_iterator<char>(in)), {});
    CHECK(contents == a.out);
    fs::remove(file);
}

TEST_CASE("connection cache directory") {
    const fs::path dir = fs::temp_directory_path() / ("nearcentral-cache-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    const std::vector<std::string> args{"connection", "--lambda", "3,1", "--i", "1", "--mu", "2,2",
                                        "--j", "2", "--method", "brute", "--cache-dir", dir.string()};
    const auto first = run(args);
    CHECK(first.code == 0);
    CHECK(fs::exists(dir / "structure-constants-n4.json"));
    CHECK(run(args).out == first.out);
    fs::remove_all(dir);
}
