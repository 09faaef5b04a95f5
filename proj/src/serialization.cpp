#include "nearcentral/serialization.hpp"

#include "nearcentral/errors.hpp"

namespace nearcentral {

Json to_json(const Partition& lambda) {
    Json out = Json::array();
    for (int part : lambda.parts()) {
        out.push_back(part);
    }
    return out;
}

Json to_json(const TaggedClass& c) {
    Json out;
    out["shape"] = to_json(c.shape());
    out["tag"] = c.tag();
    return out;
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Integer& z) {
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return z.get_str();
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ContractViolation("partition JSON must be an array");
    }
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw ContractViolation("partition parts must be integers");
        }
        parts.push_back(v.get<int>());
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) {
            throw ContractViolation("partition parts must be weakly decreasing");
        }
    }
    return Partition(parts);
}

TaggedClass tagged_class_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("tag") || !j["tag"].is_number_integer()) {
        throw ContractViolation("tagged class JSON needs \"shape\" and integer \"tag\"");
    }
    return TaggedClass(partition_from_json(j["shape"]), j["tag"].get<int>());
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        throw ContractViolation("rational JSON must be a \"p/q\" string");
    }
    return Rational::parse(j.get<std::string>());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Integer(j.get<long>());
    }
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) == 0) {
            return z;
        }
    }
    throw ContractViolation("integer JSON must be a number or a decimal string");
}

std::string json_key(const TaggedClass& c) { return to_json(c).dump(); }

}  // namespace nearcentral
