#pragma once

/**
 * @file loop.hpp
 * @brief Certified quasigroups and loops: multiplication, both divisions,
 *        two-sided inverses, generated subloops and associativity witnesses.
 */

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "check_result.hpp"
#include "latin.hpp"
#include "sweep.hpp"

namespace nafil {

/// A Latin table together with its precomputed division tables.
class Quasigroup {
public:
    std::size_t order() const noexcept { return table_.order(); }
    const Table& table() const noexcept { return table_; }

    Element multiply(Element x, Element y) const {
        check(x);
        check(y);
        return table_(x, y);
    }

    /// The unique x with a*x = b.
    Element left_divide(Element a, Element b) const {
        check(a);
        check(b);
        return ldiv_[index(a, b)];
    }

    /// The unique x with x*a = b.
    Element right_divide(Element a, Element b) const {
        check(a);
        check(b);
        return rdiv_[index(a, b)];
    }

    // Unchecked variants for exhaustive sweeps.
    Element mul(Element x, Element y) const noexcept { return table_(x, y); }
    Element ldiv(Element a, Element b) const noexcept { return ldiv_[index(a, b)]; }
    Element rdiv(Element a, Element b) const noexcept { return rdiv_[index(a, b)]; }

    friend Quasigroup certify_quasigroup(Table t);

private:
    std::size_t index(Element a, Element b) const noexcept { return (a - 1) * table_.order() + (b - 1); }

    void check(Element x) const {
        if (x < 1 || x > table_.order()) {
            throw range_error("element " + std::to_string(x) + " outside 1.." + std::to_string(table_.order()));
        }
    }

    Table table_;
    std::vector<Element> ldiv_;
    std::vector<Element> rdiv_;
};

/// Certifies `t` as Latin, or throws not_latin_error at the first repeat.
inline Quasigroup certify_quasigroup(Table t) {
    if (auto v = find_latin_violation(t.as_block())) throw not_latin_error(v->line, v->index, v->label);
    Quasigroup q;
    const std::size_t n = t.order();
    q.ldiv_.assign(n * n, 0);
    q.rdiv_.assign(n * n, 0);
    for (Element a = 1; a <= n; ++a) {
        for (Element x = 1; x <= n; ++x) {
            Element b = t(a, x);
            q.ldiv_[(a - 1) * n + (b - 1)] = x;
            b = t(x, a);
            q.rdiv_[(a - 1) * n + (b - 1)] = x;
        }
    }
    q.table_ = std::move(t);
    return q;
}

class Loop {
public:
    const Quasigroup& quasigroup() const noexcept { return q_; }
    const Table& table() const noexcept { return q_.table(); }
    std::size_t order() const noexcept { return q_.order(); }
    Element identity() const noexcept { return e_; }

    Element multiply(Element x, Element y) const { return q_.multiply(x, y); }
    Element left_divide(Element a, Element b) const { return q_.left_divide(a, b); }
    Element right_divide(Element a, Element b) const { return q_.right_divide(a, b); }

    Element mul(Element x, Element y) const noexcept { return q_.mul(x, y); }

    friend Loop certify_loop(Quasigroup q);

private:
    Quasigroup q_;
    Element e_ = 1;
};

/// Finds the two-sided identity, or throws not_a_loop_error.
inline Loop certify_loop(Quasigroup q) {
    const std::size_t n = q.order();
    for (Element e = 1; e <= n; ++e) {
        bool ok = true;
        for (Element x = 1; x <= n && ok; ++x) ok = q.mul(e, x) == x && q.mul(x, e) == x;
        if (ok) {
            Loop l;
            l.q_ = std::move(q);
            l.e_ = e;
            return l;
        }
    }
    throw not_a_loop_error();
}

inline Loop certify_loop(Table t) { return certify_loop(certify_quasigroup(std::move(t))); }

/// Total map x -> x^-1. Index 0 is unused.
class InverseMap {
public:
    explicit InverseMap(std::vector<Element> inv) : inv_(std::move(inv)) {}

    Element operator()(Element x) const noexcept { return inv_[x]; }
    std::size_t order() const noexcept { return inv_.size() - 1; }

    bool operator==(const InverseMap&) const = default;

private:
    std::vector<Element> inv_;
};

/// Left inverse of x is e/x, right inverse is x\e; both must agree.
inline std::optional<InverseMap> try_inverse_map(const Loop& l, Element* bad = nullptr, Element* left = nullptr,
                                                 Element* right = nullptr) {
    const auto& q = l.quasigroup();
    std::vector<Element> inv(l.order() + 1, 0);
    for (Element x = 1; x <= l.order(); ++x) {
        Element li = q.rdiv(x, l.identity());
        Element ri = q.ldiv(x, l.identity());
        if (li != ri) {
            if (bad) *bad = x;
            if (left) *left = li;
            if (right) *right = ri;
            return std::nullopt;
        }
        inv[x] = li;
    }
    return InverseMap(std::move(inv));
}

/// Throws not_invertible_error naming the first element whose one-sided
/// inverses differ.
inline InverseMap inverse_map(const Loop& l) {
    Element bad = 0, li = 0, ri = 0;
    if (auto m = try_inverse_map(l, &bad, &li, &ri)) return *std::move(m);
    throw not_invertible_error(bad, li, ri);
}

/// Smallest subset containing `seed` and the identity that is closed under
/// multiplication and both divisions.
inline ElementSet generated_subloop(const Loop& l, std::span<const Element> seed) {
    const auto& q = l.quasigroup();
    const std::size_t n = l.order();
    std::vector<char> in(n + 1, 0);
    ElementSet members;
    auto add = [&](Element x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    };
    add(l.identity());
    for (Element s : seed) {
        if (s < 1 || s > n) throw range_error("seed element " + std::to_string(s) + " out of range");
        add(s);
    }
    // Every pair (a, b) with max index >= done has not been combined yet.
    std::size_t done = 0;
    while (done < members.size()) {
        std::size_t end = members.size();
        for (std::size_t i = 0; i < end; ++i) {
            for (std::size_t j = (i < done ? done : 0); j < end; ++j) {
                Element a = members[i], b = members[j];
                add(q.mul(a, b));
                add(q.mul(b, a));
                add(q.ldiv(a, b));
                add(q.ldiv(b, a));
                add(q.rdiv(a, b));
                add(q.rdiv(b, a));
            }
        }
        done = end;
    }
    std::sort(members.begin(), members.end());
    return members;
}

inline ElementSet generated_subloop(const Loop& l, std::initializer_list<Element> seed) {
    return generated_subloop(l, std::span<const Element>(seed.begin(), seed.size()));
}

/// Sweeps all n^3 triples; reports the lexicographically first triple with
/// (x*y)*z != x*(y*z).
inline CheckResult associativity_witness(const Quasigroup& q, Execution exec = Execution::automatic) {
    auto r = sweep<3>(
        q.order(),
        [&q](const std::array<Element, 3>& t) {
            return q.mul(q.mul(t[0], t[1]), t[2]) == q.mul(t[0], q.mul(t[1], t[2]));
        },
        exec);
    CheckResult out;
    out.property = PropertyId::assoc;
    out.holds = !r.witness;
    if (r.witness) out.witness.assign(r.witness->begin(), r.witness->end());
    out.checked_count = r.checked;
    return out;
}

inline CheckResult associativity_witness(const Loop& l, Execution exec = Execution::automatic) {
    return associativity_witness(l.quasigroup(), exec);
}

/// True iff `s` contains the identity and is closed under product and both
/// divisions.
inline bool is_closed(const Loop& l, std::span<const Element> s) {
    std::vector<char> in(l.order() + 1, 0);
    for (Element x : s) in[x] = 1;
    if (!in[l.identity()]) return false;
    const auto& q = l.quasigroup();
    for (Element a : s) {
        for (Element b : s) {
            if (!in[q.mul(a, b)] || !in[q.ldiv(a, b)] || !in[q.rdiv(a, b)]) return false;
        }
    }
    return true;
}

/// Associativity restricted to the triples drawn from `s`.
inline bool is_associative_on(const Loop& l, std::span<const Element> s) {
    for (Element x : s) {
        for (Element y : s) {
            Element xy = l.mul(x, y);
            for (Element z : s) {
                if (l.mul(xy, z) != l.mul(x, l.mul(y, z))) return false;
            }
        }
    }
    return true;
}

}  // namespace nafil
