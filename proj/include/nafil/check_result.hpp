#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "types.hpp"

namespace nafil {

enum class PropertyId {
    assoc,
    comm,
    flex,
    lip,
    rip,
    ip,
    aip,
    cip,
    wip,
    lbol,
    rbol,
    moufang,
    pap,
};

inline constexpr std::array<PropertyId, 13> all_properties = {
    PropertyId::assoc, PropertyId::comm, PropertyId::flex,  PropertyId::lip,  PropertyId::rip,
    PropertyId::ip,    PropertyId::aip,  PropertyId::cip,   PropertyId::wip,  PropertyId::lbol,
    PropertyId::rbol,  PropertyId::moufang, PropertyId::pap,
};

inline constexpr std::string_view name(PropertyId p) {
    switch (p) {
        case PropertyId::assoc: return "ASSOC";
        case PropertyId::comm: return "COMM";
        case PropertyId::flex: return "FLEX";
        case PropertyId::lip: return "LIP";
        case PropertyId::rip: return "RIP";
        case PropertyId::ip: return "IP";
        case PropertyId::aip: return "AIP";
        case PropertyId::cip: return "CIP";
        case PropertyId::wip: return "WIP";
        case PropertyId::lbol: return "LBOL";
        case PropertyId::rbol: return "RBOL";
        case PropertyId::moufang: return "MOUFANG";
        case PropertyId::pap: return "PAP";
    }
    return "?";
}

/// Case-insensitive lookup by short name ("lbol", "Moufang", ...).
inline std::optional<PropertyId> property_from_name(std::string_view s) {
    std::string upper(s);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (PropertyId p : all_properties) {
        if (name(p) == upper) return p;
    }
    return std::nullopt;
}

/// Normative identity for each property, emitted verbatim in reports.
inline constexpr std::string_view identity_text(PropertyId p) {
    switch (p) {
        case PropertyId::assoc: return "(x*y)*z = x*(y*z)";
        case PropertyId::comm: return "x*y = y*x";
        case PropertyId::flex: return "x*(y*x) = (x*y)*x";
        case PropertyId::lip: return "x^-1*(x*y) = y";
        case PropertyId::rip: return "(y*x)*x^-1 = y";
        case PropertyId::ip: return "x^-1*(x*y) = y and (y*x)*x^-1 = y";
        case PropertyId::aip: return "(x*y)^-1 = x^-1*y^-1";
        case PropertyId::cip: return "(x*y)*x^-1 = y";
        case PropertyId::wip: return "x*(y*x)^-1 = y^-1";
        case PropertyId::lbol: return "x*(y*(x*z)) = (x*(y*x))*z";
        case PropertyId::rbol: return "((z*x)*y)*x = z*((x*y)*x)";
        case PropertyId::moufang: return "(x*y)*(z*x) = (x*(y*z))*x";
        case PropertyId::pap: return "for every x, the subloop generated by x is associative";
    }
    return "";
}

/// Identities that mention inverses (or, for PAP, the identity element).
inline constexpr bool needs_loop(PropertyId p) {
    switch (p) {
        case PropertyId::lip:
        case PropertyId::rip:
        case PropertyId::ip:
        case PropertyId::aip:
        case PropertyId::cip:
        case PropertyId::wip:
        case PropertyId::pap: return true;
        default: return false;
    }
}

inline constexpr bool needs_inverses(PropertyId p) { return needs_loop(p) && p != PropertyId::pap; }

/// Outcome of one exhaustive identity check. `holds` iff `witness` is empty.
struct CheckResult {
    PropertyId property = PropertyId::assoc;
    bool holds = true;
    std::vector<Element> witness;
    std::uint64_t checked_count = 0;

    bool operator==(const CheckResult&) const = default;
};

}  // namespace nafil
