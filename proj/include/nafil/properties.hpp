#pragma once

/**
 * @file properties.hpp
 * @brief Exhaustive checkers for the classical loop and quasigroup identities.
 *
 * Each check sweeps every tuple of the identity's arity in lexicographic
 * order and reports the first counterexample. Inverse-based identities use
 * the unique two-sided inverse, so they require an invertible loop. The exact
 * identity evaluated for each property is `identity_text(p)`.
 */

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "check_result.hpp"
#include "loop.hpp"
#include "sweep.hpp"

namespace nafil {

namespace detail {

template <std::size_t Arity, class Pred>
CheckResult run_sweep(PropertyId p, std::size_t n, const Pred& holds, Execution exec) {
    auto r = sweep<Arity>(n, holds, exec);
    CheckResult out;
    out.property = p;
    out.holds = !r.witness;
    if (r.witness) out.witness.assign(r.witness->begin(), r.witness->end());
    out.checked_count = r.checked;
    return out;
}

using Pair = std::array<Element, 2>;
using Triple = std::array<Element, 3>;

inline CheckResult check_inverse_free(const Quasigroup& q, PropertyId p, Execution exec) {
    const std::size_t n = q.order();
    auto f = [&q](Element a, Element b) { return q.mul(a, b); };
    switch (p) {
        case PropertyId::assoc:
            return run_sweep<3>(p, n, [&](const Triple& t) { return f(f(t[0], t[1]), t[2]) == f(t[0], f(t[1], t[2])); },
                                exec);
        case PropertyId::comm:
            return run_sweep<2>(p, n, [&](const Pair& t) { return f(t[0], t[1]) == f(t[1], t[0]); }, exec);
        case PropertyId::flex:
            return run_sweep<2>(
                p, n, [&](const Pair& t) { return f(t[0], f(t[1], t[0])) == f(f(t[0], t[1]), t[0]); }, exec);
        case PropertyId::lbol:
            return run_sweep<3>(
                p, n,
                [&](const Triple& t) {
                    auto [x, y, z] = t;
                    return f(x, f(y, f(x, z))) == f(f(x, f(y, x)), z);
                },
                exec);
        case PropertyId::rbol:
            return run_sweep<3>(
                p, n,
                [&](const Triple& t) {
                    auto [x, y, z] = t;
                    return f(f(f(z, x), y), x) == f(z, f(f(x, y), x));
                },
                exec);
        case PropertyId::moufang:
            return run_sweep<3>(
                p, n,
                [&](const Triple& t) {
                    auto [x, y, z] = t;
                    return f(f(x, y), f(z, x)) == f(f(x, f(y, z)), x);
                },
                exec);
        default:
            throw std::invalid_argument(std::string(name(p)) + " is not an inverse-free identity");
    }
}

inline CheckResult check_with_inverses(const Loop& l, PropertyId p, Execution exec) {
    const InverseMap inv = inverse_map(l);
    const std::size_t n = l.order();
    auto f = [&l](Element a, Element b) { return l.mul(a, b); };
    switch (p) {
        case PropertyId::lip:
            return run_sweep<2>(p, n, [&](const Pair& t) { return f(inv(t[0]), f(t[0], t[1])) == t[1]; }, exec);
        case PropertyId::rip:
            return run_sweep<2>(p, n, [&](const Pair& t) { return f(f(t[1], t[0]), inv(t[0])) == t[1]; }, exec);
        case PropertyId::ip:
            return run_sweep<2>(
                p, n,
                [&](const Pair& t) {
                    return f(inv(t[0]), f(t[0], t[1])) == t[1] && f(f(t[1], t[0]), inv(t[0])) == t[1];
                },
                exec);
        case PropertyId::aip:
            return run_sweep<2>(p, n, [&](const Pair& t) { return inv(f(t[0], t[1])) == f(inv(t[0]), inv(t[1])); },
                                exec);
        case PropertyId::cip:
            return run_sweep<2>(p, n, [&](const Pair& t) { return f(f(t[0], t[1]), inv(t[0])) == t[1]; }, exec);
        case PropertyId::wip:
            return run_sweep<2>(p, n, [&](const Pair& t) { return f(t[0], inv(f(t[1], t[0]))) == inv(t[1]); },
                                exec);
        default:
            throw std::invalid_argument(std::string(name(p)) + " does not use inverses");
    }
}

inline CheckResult check_power_associative(const Loop& l) {
    CheckResult out;
    out.property = PropertyId::pap;
    for (Element x = 1; x <= l.order(); ++x) {
        ++out.checked_count;
        ElementSet s = generated_subloop(l, {x});
        if (!is_associative_on(l, s)) {
            out.holds = false;
            out.witness = {x};
            return out;
        }
    }
    return out;
}

}  // namespace detail

/// Checks one identity on a loop. Inverse-based identities throw
/// not_invertible_error when the loop has an element with distinct one-sided
/// inverses.
inline CheckResult check(const Loop& l, PropertyId p, Execution exec = Execution::automatic) {
    if (p == PropertyId::pap) return detail::check_power_associative(l);
    if (needs_inverses(p)) return detail::check_with_inverses(l, p, exec);
    return detail::check_inverse_free(l.quasigroup(), p, exec);
}

/// Identities that mention neither inverses nor the identity element:
/// ASSOC, COMM, FLEX, LBOL, RBOL, MOUFANG. Anything else throws
/// std::invalid_argument.
inline CheckResult check_identity_on_quasigroup(const Quasigroup& q, PropertyId p,
                                                Execution exec = Execution::automatic) {
    if (needs_loop(p)) throw std::invalid_argument(std::string(name(p)) + " needs a loop with inverses");
    return detail::check_inverse_free(q, p, exec);
}

/// True iff `witness` falsifies identity `p` on `l`. Used to audit results.
inline bool refutes(const Loop& l, PropertyId p, const std::vector<Element>& w) {
    auto f = [&l](Element a, Element b) { return l.mul(a, b); };
    if (p == PropertyId::pap) return w.size() == 1 && !is_associative_on(l, generated_subloop(l, {w[0]}));
    if (needs_inverses(p)) {
        const InverseMap inv = inverse_map(l);
        if (w.size() != 2) return false;
        Element x = w[0], y = w[1];
        switch (p) {
            case PropertyId::lip: return f(inv(x), f(x, y)) != y;
            case PropertyId::rip: return f(f(y, x), inv(x)) != y;
            case PropertyId::ip: return f(inv(x), f(x, y)) != y || f(f(y, x), inv(x)) != y;
            case PropertyId::aip: return inv(f(x, y)) != f(inv(x), inv(y));
            case PropertyId::cip: return f(f(x, y), inv(x)) != y;
            case PropertyId::wip: return f(x, inv(f(y, x))) != inv(y);
            default: return false;
        }
    }
    switch (p) {
        case PropertyId::comm: return w.size() == 2 && f(w[0], w[1]) != f(w[1], w[0]);
        case PropertyId::flex: return w.size() == 2 && f(w[0], f(w[1], w[0])) != f(f(w[0], w[1]), w[0]);
        default: break;
    }
    if (w.size() != 3) return false;
    Element x = w[0], y = w[1], z = w[2];
    switch (p) {
        case PropertyId::assoc: return f(f(x, y), z) != f(x, f(y, z));
        case PropertyId::lbol: return f(x, f(y, f(x, z))) != f(f(x, f(y, x)), z);
        case PropertyId::rbol: return f(f(f(z, x), y), x) != f(z, f(f(x, y), x));
        case PropertyId::moufang: return f(f(x, y), f(z, x)) != f(f(x, f(y, z)), x);
        default: return false;
    }
}

/// A property result, or the reason it was not evaluated.
struct PropertyOutcome {
    std::optional<CheckResult> result;
    std::string skipped;

    bool operator==(const PropertyOutcome&) const = default;
};

struct PropertyReport {
    std::size_t order = 0;
    Element identity = 1;
    std::map<PropertyId, PropertyOutcome> outcomes;

    const PropertyOutcome& operator[](PropertyId p) const { return outcomes.at(p); }
    bool holds(PropertyId p) const {
        const auto& o = outcomes.at(p);
        return o.result && o.result->holds;
    }
};

/// Runs every property. Inverse-based ones are skipped, with a reason, when
/// the loop is not invertible.
inline PropertyReport full_report(const Loop& l, Execution exec = Execution::automatic) {
    PropertyReport r;
    r.order = l.order();
    r.identity = l.identity();
    const bool invertible = try_inverse_map(l).has_value();
    for (PropertyId p : all_properties) {
        PropertyOutcome o;
        if (needs_inverses(p) && !invertible) {
            o.skipped = "loop is not invertible";
        } else {
            o.result = check(l, p, exec);
        }
        r.outcomes.emplace(p, std::move(o));
    }
    return r;
}

}  // namespace nafil
