#include "ghcs/families.hpp"

#include "ghcs/error.hpp"

namespace ghcs {

const char* to_string(Family family) noexcept {
    switch (family) {
        case Family::CS: return "CS";
        case Family::F01: return "F01";
        case Family::F11: return "F11";
        case Family::F10: return "F10";
        case Family::F21: return "F21";
    }
    return "unknown";
}

std::optional<Family> parse_family(const std::string& name) {
    for (Family f : {Family::CS, Family::F01, Family::F11, Family::F10, Family::F21}) {
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

std::optional<Family> shape_family(const ParameterSet& params) {
    const std::size_t p = params.p();
    const std::size_t q = params.q();
    if (p == 0 && q == 0) return Family::CS;
    if (p == 0 && q == 1) return Family::F01;
    if (p == 1 && q == 1) return Family::F11;
    if (p == 1 && q == 0) return Family::F10;
    if (p == 2 && q == 1) return Family::F21;
    return std::nullopt;
}

void require_family(Family family, const ParameterSet& params) {
    if (!params.is_real()) {
        throw ParameterError(std::string("family ") + to_string(family) + " takes real parameters only");
    }
    const auto shape = shape_family(params);
    if (!shape || *shape != family) {
        throw ParameterError(std::string("parameters ") + params.label() + " do not have the shape of family " +
                             to_string(family));
    }
}

}  // namespace ghcs
