#include "nearcentral/structure_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "nearcentral/errors.hpp"

namespace nearcentral {

Json structure_constants_to_json(const StructureConstants& sc) {
    Json records = Json::array();
    for (const auto& a : sc.classes()) {
        for (const auto& b : sc.classes()) {
            Json terms = Json::array();
            for (const auto& [c, k] : sc.product(a, b)) {
                Json term;
                term["class"] = to_json(c);
                term["c"] = to_json(k);
                terms.push_back(std::move(term));
            }
            Json record;
            record["left"] = to_json(a);
            record["right"] = to_json(b);
            record["terms"] = std::move(terms);
            records.push_back(std::move(record));
        }
    }
    Json out;
    out["n"] = sc.n();
    out["records"] = std::move(records);
    return out;
}

StructureConstants structure_constants_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("records")) {
        throw ContractViolation("structure constant table needs \"n\" and \"records\"");
    }
    const int n = j["n"].get<int>();
    auto classes = tagged_classes_of(n);
    std::map<std::pair<TaggedClass, TaggedClass>, std::map<TaggedClass, Integer>> table;
    for (const auto& record : j["records"]) {
        auto& terms = table[{tagged_class_from_json(record["left"]), tagged_class_from_json(record["right"])}];
        for (const auto& term : record["terms"]) {
            terms.emplace(tagged_class_from_json(term["class"]), integer_from_json(term["c"]));
        }
    }
    if (table.size() != classes.size() * classes.size()) {
        throw ContractViolation("structure constant table for n=" + std::to_string(n) + " is incomplete");
    }
    for (const auto& [key, terms] : table) {
        if (key.first.n() != n || key.second.n() != n) {
            throw ContractViolation("structure constant table mixes values of n");
        }
    }
    return StructureConstants(n, std::move(classes), std::move(table));
}

StructureCache::StructureCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path StructureCache::file_for(int n) const {
    return directory_ / ("structure-constants-n" + std::to_string(n) + ".json");
}

std::optional<StructureConstants> StructureCache::load(int n) const {
    std::ifstream in(file_for(n));
    if (!in) {
        return std::nullopt;
    }
    try {
        const Json j = Json::parse(in);
        auto sc = structure_constants_from_json(j);
        if (sc.n() != n) {
            return std::nullopt;
        }
        return sc;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

namespace {

class FileLock {
public:
    explicit FileLock(const std::filesystem::path& path) : fd_(::open(path.c_str(), O_RDWR | O_CREAT, 0644)) {
        if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) {
            if (fd_ >= 0) {
                ::close(fd_);
            }
            throw std::runtime_error("cannot lock " + path.string());
        }
    }
    ~FileLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_;
};

}  // namespace

void StructureCache::store(const StructureConstants& sc) const {
    std::filesystem::create_directories(directory_);
    const auto target = file_for(sc.n());
    FileLock lock(target.string() + ".lock");
    const auto tmp = std::filesystem::path(target.string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << structure_constants_to_json(sc).dump() << '\n';
        out.flush();
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

std::shared_ptr<const StructureConstants> StructureCache::get(int n, const BruteForceLimits& limits,
                                                              int jobs) const {
    if (auto sc = load(n)) {
        return std::make_shared<const StructureConstants>(std::move(*sc));
    }
    auto sc = std::make_shared<const StructureConstants>(StructureConstants::brute_force(n, limits, jobs));
    store(*sc);
    return sc;
}

}  // namespace nearcentral
