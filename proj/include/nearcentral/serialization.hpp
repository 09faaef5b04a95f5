#pragma once

#include <string>

#include <json.hpp>

#include "nearcentral/partition.hpp"
#include "nearcentral/rational.hpp"

namespace nearcentral {

// ordered_json keeps keys in insertion order, which makes output stable.
using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
Json to_json(const TaggedClass& c);
/// "p/q", or "p" for integers.
Json to_json(const Rational& r);
Json to_json(const Integer& z);

Partition partition_from_json(const Json& j);
TaggedClass tagged_class_from_json(const Json& j);
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

/// Compact JSON text of a tagged class, used as an object key.
std::string json_key(const TaggedClass& c);

}  // namespace nearcentral
