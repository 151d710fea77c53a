#pragma once

/**
 * @file report.hpp
 * @brief Full analysis of a Cayley table and its JSON / text renderings.
 *
 * The JSON body is deterministic: re-analyzing the same input yields the same
 * document. The optional `envelope` object is the only place that carries
 * run-specific data such as a timestamp, and it is ignored on read.
 */

#include <chrono>
#include <ctime>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "loop.hpp"
#include "properties.hpp"
#include "subloops.hpp"

namespace nafil {

inline constexpr const char* report_format_version = "1.0";

/// Exhaustive identity sweeps above this order need an explicit override.
inline constexpr std::size_t default_sweep_cap = 256;

struct ReportSource {
    std::string kind = "external";  ///< "constructed" or "external"
    std::optional<std::size_t> m;
    std::optional<std::string> path;

    bool operator==(const ReportSource&) const = default;
};

struct Certifications {
    bool latin = false;
    bool standard_form = false;
    bool loop = false;
    bool invertible = false;

    bool operator==(const Certifications&) const = default;
};

struct SubloopSummary {
    std::map<std::size_t, std::size_t> subgroup_census;
    std::vector<ElementSet> nonassociative_subloops;
    bool simple = false;
    std::vector<LagrangeViolation> lagrange_violations;

    bool operator==(const SubloopSummary&) const = default;
};

struct JacobiSummary {
    bool holds = true;
    std::optional<std::array<Element, 3>> triple;
    std::vector<Coefficient> coefficients;
    std::uint64_t checked_count = 0;

    bool operator==(const JacobiSummary&) const = default;
};

struct AnalysisReport {
    std::string format_version = report_format_version;
    std::size_t order = 0;
    ReportSource source;
    Certifications certifications;
    Element identity = 1;
    std::map<PropertyId, PropertyOutcome> properties;
    std::optional<SubloopSummary> subloops;
    std::string subloops_skipped;
    std::optional<JacobiSummary> jacobi;
    std::map<std::string, std::string> not_evaluated;

    bool operator==(const AnalysisReport&) const = default;
};

struct AnalyzeOptions {
    ReportSource source;
    bool jacobi = false;
    /// Raises both the sweep cap and the subloop enumeration cap.
    std::optional<std::size_t> max_order_override;
    Execution exec = Execution::automatic;
};

/// Certifies `t` as a loop, then runs every property, the subloop analysis
/// and optionally the Jacobi check. Throws not_latin_error /
/// not_a_loop_error on invalid input and cap_exceeded_error when the order
/// is above the sweep cap without an override.
inline AnalysisReport analyze(const Table& t, const AnalyzeOptions& opt = {}) {
    const std::size_t sweep_cap = opt.max_order_override.value_or(default_sweep_cap);
    const std::size_t enum_cap = opt.max_order_override.value_or(default_enumeration_cap);
    if (t.order() > sweep_cap) throw cap_exceeded_error(t.order(), sweep_cap);

    AnalysisReport r;
    r.order = t.order();
    r.source = opt.source;
    Loop l = certify_loop(certify_quasigroup(t));
    r.certifications.latin = true;
    r.certifications.standard_form = is_standard_form(t);
    r.certifications.loop = true;
    r.certifications.invertible = try_inverse_map(l).has_value();
    r.identity = l.identity();
    r.properties = full_report(l, opt.exec).outcomes;

    if (l.order() <= enum_cap) {
        SubloopSet s = enumerate_subloops(l, enum_cap);
        r.subloops = SubloopSummary{subgroup_census(s), nonassociative_proper_subloops(s), is_simple(l, s),
                                    lagrange_violations(s)};
    } else {
        r.subloops_skipped = "order " + std::to_string(l.order()) + " exceeds enumeration cap " +
                             std::to_string(enum_cap);
    }

    if (opt.jacobi) {
        auto j = jacobi_holds(l, opt.exec);
        r.jacobi = JacobiSummary{j.holds, j.triple, j.coefficients, j.checked_count};
    }
    r.not_evaluated = {{"A_m", "not evaluated (undefined in source)"}, {"RIF", "not evaluated (undefined in source)"}};
    return r;
}

// JSON ---------------------------------------------------------------------

inline nlohmann::json to_json(const AnalysisReport& r) {
    using nlohmann::json;
    json j;
    j["format_version"] = r.format_version;
    j["order"] = r.order;

    json src;
    src["kind"] = r.source.kind;
    if (r.source.m) src["m"] = *r.source.m;
    if (r.source.path) src["path"] = *r.source.path;
    j["source"] = src;

    j["certifications"] = {{"latin", r.certifications.latin},
                           {"standard_form", r.certifications.standard_form},
                           {"loop", r.certifications.loop},
                           {"invertible", r.certifications.invertible}};
    j["identity"] = r.identity;

    json props = json::object();
    for (const auto& [id, o] : r.properties) {
        json p;
        p["identity"] = std::string(identity_text(id));
        if (o.result) {
            p["holds"] = o.result->holds;
            if (!o.result->holds) p["witness"] = o.result->witness;
            p["checked"] = o.result->checked_count;
        } else {
            p["holds"] = nullptr;
            p["skipped"] = o.skipped;
        }
        props[std::string(name(id))] = p;
    }
    j["properties"] = props;

    if (r.subloops) {
        json census = json::object();
        for (auto [order, count] : r.subloops->subgroup_census) census[std::to_string(order)] = count;
        j["subgroup_census"] = census;
        j["nonassociative_subloops"] = r.subloops->nonassociative_subloops;
        j["simple"] = r.subloops->simple;
        json lv = json::array();
        for (const auto& v : r.subloops->lagrange_violations) {
            lv.push_back({{"subloop_order", v.subloop_order}, {"order", v.loop_order}});
        }
        j["lagrange_violations"] = lv;
    } else {
        j["subgroup_census"] = nullptr;
        j["nonassociative_subloops"] = nullptr;
        j["simple"] = nullptr;
        j["lagrange_violations"] = nullptr;
        j["subloops_skipped"] = r.subloops_skipped;
    }

    if (r.jacobi) {
        json jac;
        jac["holds"] = r.jacobi->holds;
        jac["checked"] = r.jacobi->checked_count;
        if (r.jacobi->triple) {
            jac["witness"] = {{"triple", *r.jacobi->triple}, {"coefficients", r.jacobi->coefficients}};
        }
        j["jacobi"] = jac;
    }
    j["not_evaluated"] = r.not_evaluated;
    return j;
}

inline AnalysisReport report_from_json(const nlohmann::json& j) {
    AnalysisReport r;
    r.format_version = j.at("format_version").get<std::string>();
    r.order = j.at("order").get<std::size_t>();

    const auto& src = j.at("source");
    r.source.kind = src.at("kind").get<std::string>();
    if (src.contains("m")) r.source.m = src.at("m").get<std::size_t>();
    if (src.contains("path")) r.source.path = src.at("path").get<std::string>();

    const auto& c = j.at("certifications");
    r.certifications = {c.at("latin").get<bool>(), c.at("standard_form").get<bool>(), c.at("loop").get<bool>(),
                        c.at("invertible").get<bool>()};
    r.identity = j.at("identity").get<Element>();

    for (const auto& [key, p] : j.at("properties").items()) {
        auto id = property_from_name(key);
        if (!id) throw error("unknown property '" + key + "' in report");
        PropertyOutcome o;
        if (p.at("holds").is_null()) {
            o.skipped = p.at("skipped").get<std::string>();
        } else {
            CheckResult cr;
            cr.property = *id;
            cr.holds = p.at("holds").get<bool>();
            if (p.contains("witness")) cr.witness = p.at("witness").get<std::vector<Element>>();
            cr.checked_count = p.at("checked").get<std::uint64_t>();
            o.result = cr;
        }
        r.properties.emplace(*id, std::move(o));
    }

    if (!j.at("simple").is_null()) {
        SubloopSummary s;
        for (const auto& [order, count] : j.at("subgroup_census").items()) {
            s.subgroup_census[std::stoul(order)] = count.get<std::size_t>();
        }
        s.nonassociative_subloops = j.at("nonassociative_subloops").get<std::vector<ElementSet>>();
        s.simple = j.at("simple").get<bool>();
        for (const auto& v : j.at("lagrange_violations")) {
            s.lagrange_violations.push_back({v.at("subloop_order").get<std::size_t>(), v.at("order").get<std::size_t>()});
        }
        r.subloops = std::move(s);
    } else {
        r.subloops_skipped = j.at("subloops_skipped").get<std::string>();
    }

    if (j.contains("jacobi")) {
        const auto& jac = j.at("jacobi");
        JacobiSummary s;
        s.holds = jac.at("holds").get<bool>();
        s.checked_count = jac.at("checked").get<std::uint64_t>();
        if (jac.contains("witness")) {
            s.triple = jac.at("witness").at("triple").get<std::array<Element, 3>>();
            s.coefficients = jac.at("witness").at("coefficients").get<std::vector<Coefficient>>();
        }
        r.jacobi = std::move(s);
    }
    r.not_evaluated = j.at("not_evaluated").get<std::map<std::string, std::string>>();
    return r;
}

/// Report body plus an `envelope` carrying the generation time.
inline nlohmann::json to_json_with_envelope(const AnalysisReport& r) {
    auto j = to_json(r);
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream ts;
    ts << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    j["envelope"] = {{"generated_at", ts.str()}, {"tool", "nafil"}};
    return j;
}

// Text ---------------------------------------------------------------------

inline std::string format_witness(std::span<const Element> w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

inline std::string format_outcome(PropertyId id, const PropertyOutcome& o) {
    std::string line(name(id));
    if (!o.result) return line + ": skipped (" + o.skipped + ")";
    if (o.result->holds) return line + ": holds";
    return line + ": fails, witness " + format_witness(o.result->witness);
}

inline void write_summary(std::ostream& out, const AnalysisReport& r) {
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    out << "order: " << r.order << '\n';
    out << "source: " << r.source.kind;
    if (r.source.m) out << " (m = " << *r.source.m << ")";
    if (r.source.path) out << " " << *r.source.path;
    out << '\n';
    out << "identity: " << r.identity << '\n';
    out << "latin: " << yes_no(r.certifications.latin) << '\n';
    out << "standard form: " << yes_no(r.certifications.standard_form) << '\n';
    out << "invertible: " << yes_no(r.certifications.invertible) << '\n';
    for (const auto& [id, o] : r.properties) out << format_outcome(id, o) << '\n';

    if (r.subloops) {
        const auto& s = *r.subloops;
        out << "subgroups: ";
        if (s.subgroup_census.empty()) out << "none";
        bool first = true;
        for (auto [order, count] : s.subgroup_census) {
            if (!first) out << ", ";
            out << count << " of order " << order;
            first = false;
        }
        out << '\n';
        if (!s.nonassociative_subloops.empty()) {
            out << "non-associative proper subloops: " << s.nonassociative_subloops.size() << '\n';
        }
        out << "simple: " << yes_no(s.simple) << '\n';
        out << "Lagrange violations: " << s.lagrange_violations.size();
        if (!s.lagrange_violations.empty()) {
            std::map<std::size_t, std::size_t> by_order;
            for (const auto& v : s.lagrange_violations) ++by_order[v.subloop_order];
            out << " (";
            bool f = true;
            for (auto [order, count] : by_order) {
                if (!f) out << ", ";
                out << count << " of order " << order;
                f = false;
            }
            out << " in a loop of order " << r.order << ")";
        }
        out << '\n';
    } else {
        out << "subloops: skipped (" << r.subloops_skipped << ")\n";
    }

    if (r.jacobi) {
        out << "Jacobi: ";
        if (r.jacobi->holds) {
            out << "holds\n";
        } else {
            out << "fails, witness " << format_witness(*r.jacobi->triple) << " coefficients (";
            for (std::size_t i = 0; i < r.jacobi->coefficients.size(); ++i) {
                if (i) out << ", ";
                out << r.jacobi->coefficients[i];
            }
            out << ")\n";
        }
    }
    for (const auto& [prop, why] : r.not_evaluated) out << prop << ": " << why << '\n';
}

inline std::string format_summary(const AnalysisReport& r) {
    std::ostringstream ss;
    write_summary(ss, r);
    return ss.str();
}

}  // namespace nafil
