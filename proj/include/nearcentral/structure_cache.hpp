#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "nearcentral/serialization.hpp"
#include "nearcentral/z1_algebra.hpp"

namespace nearcentral {

/// {"n": n, "records": [{"left": .., "right": .., "terms": [{"class": .., "c": ..}]}]}
/// with records and terms in tagged-class order.
Json structure_constants_to_json(const StructureConstants& sc);
StructureConstants structure_constants_from_json(const Json& j);

/// Persistent per-n tables of structure constants, one file per n.
/// Writers hold an exclusive lock on a side file and publish by rename, so
/// readers always see a complete table.
class StructureCache {
public:
    explicit StructureCache(std::filesystem::path directory);

    const std::filesystem::path& directory() const { return directory_; }
    std::filesystem::path file_for(int n) const;

    /// The stored table, or nothing if absent or unreadable.
    std::optional<StructureConstants> load(int n) const;
    void store(const StructureConstants& sc) const;

    /// Loads the table for n, building and storing it on a miss.
    std::shared_ptr<const StructureConstants> get(int n, const BruteForceLimits& limits = {}, int jobs = 1) const;

private:
    std::filesystem::path directory_;
};

}  // namespace nearcentral
