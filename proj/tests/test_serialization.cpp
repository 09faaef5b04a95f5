#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "nearcentral/serialization.hpp"
#include "nearcentral/structure_cache.hpp"

using namespace nearcentral;
namespace fs = std::filesystem;

namespace {

TaggedClass T(std::vector<int> parts, int tag) { return TaggedClass(Partition(std::move(parts)), tag); }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("nearcentral-test-" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("scalar and shape encodings") {
    CHECK(to_json(Partition({3, 1, 1})).dump() == "[3,1,1]");
    CHECK(to_json(T({2, 1}, 2)).dump() == R"({"shape":[2,1],"tag":2})");
    CHECK(json_key(T({2, 1}, 2)) == R"({"shape":[2,1],"tag":2})");
    CHECK(to_json(Rational(-3, 6)).dump() == R"("-1/2")");
    CHECK(to_json(Rational(4)).dump() == R"("4")");
    CHECK(to_json(Integer(17)).dump() == "17");
    const Integer big = factorial(30);
    CHECK(to_json(big).is_string());
    CHECK(integer_from_json(to_json(big)) == big);
    CHECK(integer_from_json(Json(5)) == 5);
    CHECK(rational_from_json(Json("7/21")) == Rational(1, 3));
    CHECK(partition_from_json(Json::parse("[2,2,1]")) == Partition({2, 2, 1}));
    CHECK(tagged_class_from_json(Json::parse(R"({"shape":[3],"tag":3})")) == T({3}, 3));
}

TEST_CASE("structure constants round trip") {
    const auto sc = StructureConstants::brute_force(4);
    const Json j = structure_constants_to_json(sc);
    CHECK(j.at("n") == 4);
    CHECK(structure_constants_from_json(j) == sc);
    CHECK(structure_constants_to_json(structure_constants_from_json(j)).dump() == j.dump());
    CHECK(structure_constants_to_json(StructureConstants::brute_force(4, {}, 4)).dump() == j.dump());
}

TEST_CASE("on-disk cache") {
    TempDir dir;
    StructureCache cache(dir.path);
    CHECK(cache.file_for(5).filename() == "structure-constants-n5.json");
    CHECK_FALSE(cache.load(5).has_value());

    const auto built = cache.get(5);
    CHECK(fs::exists(cache.file_for(5)));
    const auto loaded = cache.load(5);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == *built);
    CHECK(*loaded == StructureConstants::brute_force(5));

    std::string before;
    {
        std::ifstream in(cache.file_for(5));
        before.assign(std::istreambuf_iterator<char>(in), {});
    }
    cache.store(*loaded);
    std::string after;
    {
        std::ifstream in(cache.file_for(5));
        after.assign(std::istreambuf_iterator<char>(in), {});
    }
    CHECK(before == after);

    {
        std::ofstream out(cache.file_for(5), std::ios::trunc);
        out << "{\"n\": 5, \"records\": [";
    }
    CHECK_FALSE(cache.load(5).has_value());
    CHECK(*cache.get(5) == *built);
    CHECK(cache.load(5).has_value());
}
