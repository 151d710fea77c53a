#pragma once

/**
 * @file subloops.hpp
 * @brief Subloop enumeration, subgroup census, normality and simplicity.
 *
 * A subset N of a loop L is a normal subloop when, for all x, y in L,
 *
 *     x*N = N*x,   (N*x)*y = N*(x*y),   y*(x*N) = (y*x)*N
 *
 * as sets. A loop is simple when no proper nontrivial subloop is normal.
 */

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "loop.hpp"

namespace nafil {

inline constexpr std::size_t default_enumeration_cap = 64;

struct Subloop {
    ElementSet elements;
    bool is_group = false;

    std::size_t order() const noexcept { return elements.size(); }
    bool operator==(const Subloop&) const = default;
};

struct SubloopSet {
    std::size_t loop_order = 0;
    /// Sorted by order, then lexicographically by elements.
    std::vector<Subloop> subloops;

    /// Subloops other than the trivial one and the whole loop.
    std::vector<const Subloop*> proper_nontrivial() const {
        std::vector<const Subloop*> out;
        for (const auto& s : subloops) {
            if (s.order() > 1 && s.order() < loop_order) out.push_back(&s);
        }
        return out;
    }
};

/// Every subloop, found as closures: starting from <e>, each subloop S is
/// extended by one outside element g to <S, g> until nothing new appears.
/// Any subloop T is reached by adding its elements one at a time.
inline SubloopSet enumerate_subloops(const Loop& l, std::size_t cap = default_enumeration_cap) {
    const std::size_t n = l.order();
    if (n > cap) throw cap_exceeded_error(n, cap);

    std::set<ElementSet> seen;
    std::deque<ElementSet> work;
    ElementSet trivial = generated_subloop(l, std::span<const Element>{});
    seen.insert(trivial);
    work.push_back(std::move(trivial));
    while (!work.empty()) {
        ElementSet s = std::move(work.front());
        work.pop_front();
        std::vector<char> in(n + 1, 0);
        for (Element x : s) in[x] = 1;
        for (Element g = 1; g <= n; ++g) {
            if (in[g]) continue;
            ElementSet seed = s;
            seed.push_back(g);
            ElementSet t = generated_subloop(l, seed);
            if (seen.insert(t).second) work.push_back(std::move(t));
        }
    }

    SubloopSet out;
    out.loop_order = n;
    for (const auto& s : seen) out.subloops.push_back({s, is_associative_on(l, s)});
    std::stable_sort(out.subloops.begin(), out.subloops.end(), [](const Subloop& a, const Subloop& b) {
        return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
    });
    return out;
}

/// Number of proper nontrivial subgroups (associative subloops), by order.
inline std::map<std::size_t, std::size_t> subgroup_census(const SubloopSet& s) {
    std::map<std::size_t, std::size_t> census;
    for (const Subloop* sub : s.proper_nontrivial()) {
        if (sub->is_group) ++census[sub->order()];
    }
    return census;
}

/// Proper nontrivial subloops that are not groups.
inline std::vector<ElementSet> nonassociative_proper_subloops(const SubloopSet& s) {
    std::vector<ElementSet> out;
    for (const Subloop* sub : s.proper_nontrivial()) {
        if (!sub->is_group) out.push_back(sub->elements);
    }
    return out;
}

inline bool is_normal(const Loop& l, std::span<const Element> nset) {
    if (!is_closed(l, nset)) throw std::invalid_argument("is_normal: set is not a subloop");
    const std::size_t n = l.order();
    auto image = [&](auto&& fn) {
        ElementSet out;
        out.reserve(nset.size());
        for (Element a : nset) out.push_back(fn(a));
        std::sort(out.begin(), out.end());
        return out;
    };
    for (Element x = 1; x <= n; ++x) {
        if (image([&](Element a) { return l.mul(x, a); }) != image([&](Element a) { return l.mul(a, x); })) {
            return false;
        }
        for (Element y = 1; y <= n; ++y) {
            const Element xy = l.mul(x, y);
            const Element yx = l.mul(y, x);
            if (image([&](Element a) { return l.mul(l.mul(a, x), y); }) !=
                image([&](Element a) { return l.mul(a, xy); })) {
                return false;
            }
            if (image([&](Element a) { return l.mul(y, l.mul(x, a)); }) !=
                image([&](Element a) { return l.mul(yx, a); })) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_simple(const Loop& l, const SubloopSet& s) {
    for (const Subloop* sub : s.proper_nontrivial()) {
        if (is_normal(l, sub->elements)) return false;
    }
    return true;
}

inline bool is_simple(const Loop& l, std::size_t cap = default_enumeration_cap) {
    return is_simple(l, enumerate_subloops(l, cap));
}

struct LagrangeViolation {
    std::size_t subloop_order;
    std::size_t loop_order;

    bool operator==(const LagrangeViolation&) const = default;
};

/// One entry per subloop whose order does not divide the loop's order.
inline std::vector<LagrangeViolation> lagrange_violations(const SubloopSet& s) {
    std::vector<LagrangeViolation> out;
    for (const auto& sub : s.subloops) {
        if (s.loop_order % sub.order() != 0) out.push_back({sub.order(), s.loop_order});
    }
    return out;
}

}  // namespace nafil
