#pragma once

/**
 * @file construct.hpp
 * @brief Block generators and assembly for the odd-order NAFIL family.
 *
 * For m >= 2, k = m + 1 and n = 2m + 1 the Cayley table is
 *
 *     [L(m)]    | [L(k)]'
 *     ----------+------------
 *     [L(k)]''  | [C_k]^T*
 *
 * where [L(m)] is a group of order m over 1..m (cyclic by default), [L(k)] is
 * the cyclic block over m+1..2m+1, [L(k)]' drops row k-1 of [L(k)], [L(k)]''
 * drops column k, and [C_k]^T* is the counter-cyclic transpose with its k
 * entries replaced, along the path (1,2), (2,3), ..., (k-1,k), (k,1), by the
 * last column of [L(k)]: 2m+1, m+1, m+2, ..., 2m.
 *
 * Every block comes from a closed-form index formula. The output is
 * re-certified before it is returned.
 */

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "latin.hpp"
#include "loop.hpp"
#include "text_format.hpp"

namespace nafil {

/// entry(i, j) = offset + ((i + j - 2) mod size) + 1.
inline Block cyclic_block(std::size_t size, Element offset = 0) {
    if (size < 1) throw range_error("cyclic_block: size must be at least 1");
    std::vector<Element> entries(size * size);
    ElementSet universe(size);
    for (std::size_t i = 0; i < size; ++i) {
        universe[i] = offset + static_cast<Element>(i + 1);
        for (std::size_t j = 0; j < size; ++j) entries[i * size + j] = offset + static_cast<Element>((i + j) % size + 1);
    }
    return Block(size, size, std::move(entries), std::move(universe));
}

/// Transposed counter-cyclic block: entry(i, j) = ((i - j) mod k) + 1.
inline Block counter_cyclic_transpose(std::size_t k) {
    if (k < 2) throw range_error("counter_cyclic_transpose: k must be at least 2");
    std::vector<Element> entries(k * k);
    ElementSet universe(k);
    for (std::size_t i = 0; i < k; ++i) {
        universe[i] = static_cast<Element>(i + 1);
        for (std::size_t j = 0; j < k; ++j) entries[i * k + j] = static_cast<Element>((i + k - j) % k + 1);
    }
    return Block(k, k, std::move(entries), std::move(universe));
}

/// Positions and values substituted into the counter-cyclic transpose.
inline std::vector<Assignment> starred_assignments(std::size_t m) {
    if (m < 2) throw range_error("m must be at least 2");
    const std::size_t k = m + 1;
    const Block last_column_source = cyclic_block(k, static_cast<Element>(m));
    std::vector<Assignment> out;
    out.reserve(k);
    // Walk the path of k-entries and read the last column of [L(k)] top to bottom.
    for (std::size_t i = 1; i <= k - 1; ++i) out.push_back({i, i + 1, last_column_source.at(i, k)});
    out.push_back({k, 1, last_column_source.at(k, k)});
    return out;
}

inline Block starred_block(std::size_t m) {
    auto a = starred_assignments(m);
    return substitute(counter_cyclic_transpose(m + 1), a);
}

/// [L(k)] with row k-1 removed: an m x k block over m+1..2m+1.
inline Block lk_prime(std::size_t m) {
    if (m < 2) throw range_error("m must be at least 2");
    return delete_row(cyclic_block(m + 1, static_cast<Element>(m)), m);
}

/// [L(k)] with column k removed: a k x m block over m+1..2m+1.
inline Block lk_double_prime(std::size_t m) {
    if (m < 2) throw range_error("m must be at least 2");
    return delete_column(cyclic_block(m + 1, static_cast<Element>(m)), m + 1);
}

struct ConstructionParams {
    std::size_t m = 2;
    /// Group table for L(m) over 1..m in standard form; cyclic C_m when absent.
    std::optional<Table> lm_table;

    std::size_t k() const noexcept { return m + 1; }
    std::size_t n() const noexcept { return 2 * m + 1; }
};

struct ConstructionTrace {
    Block lm;
    Block lk;
    Block lk_prime;
    Block lk_double_prime;
    Block starred;
    Table table;
};

/// Raised when a certification stage fails on the assembled table (or on a
/// supplied L(m) table).
class construction_invalid : public error {
public:
    construction_invalid(std::string stage, std::string detail, std::vector<Element> witness = {})
        : error("construction failed at stage '" + stage + "': " + detail), stage_(std::move(stage)),
          witness_(std::move(witness)) {}

    const std::string& stage() const noexcept { return stage_; }
    const std::vector<Element>& witness() const noexcept { return witness_; }

private:
    std::string stage_;
    std::vector<Element> witness_;
};

struct Construction {
    Loop loop;
    ConstructionTrace trace;
};

namespace detail {

inline void validate_lm(const Table& t, std::size_t m) {
    if (t.order() != m) {
        throw construction_invalid("lm_table", "expected order " + std::to_string(m) + ", got " +
                                                   std::to_string(t.order()));
    }
    if (auto v = find_latin_violation(t.as_block())) {
        throw construction_invalid("lm_table", "not Latin", {static_cast<Element>(v->index), v->label});
    }
    if (!is_standard_form(t)) throw construction_invalid("lm_table", "not in standard form");
    auto q = certify_quasigroup(t);
    auto assoc = associativity_witness(q, Execution::sequential);
    if (!assoc.holds) throw construction_invalid("lm_table", "not associative", assoc.witness);
}

}  // namespace detail

/// Builds and certifies (L_n, *): Latin, standard form, identity 1, unique
/// two-sided inverses, non-associative.
inline Construction construct_nafil(const ConstructionParams& p, Execution exec = Execution::automatic) {
    if (p.m < 2) throw range_error("m must be at least 2");
    const std::size_t m = p.m;

    Block lm;
    if (p.lm_table) {
        detail::validate_lm(*p.lm_table, m);
        lm = p.lm_table->as_block();
    } else {
        lm = cyclic_block(m);
    }

    ConstructionTrace trace{lm, cyclic_block(m + 1, static_cast<Element>(m)), lk_prime(m), lk_double_prime(m),
                            starred_block(m), Table{}};
    trace.table = assemble(trace.lm, trace.lk_prime, trace.lk_double_prime, trace.starred);

    if (auto v = find_latin_violation(trace.table.as_block())) {
        throw construction_invalid("latin", "repeated label", {static_cast<Element>(v->index), v->label});
    }
    if (!is_standard_form(trace.table)) throw construction_invalid("standard_form", "first row/column out of order");

    std::optional<Loop> certified;
    try {
        certified = certify_loop(certify_quasigroup(trace.table));
    } catch (const not_a_loop_error&) {
        throw construction_invalid("identity", "no two-sided identity");
    }
    Loop loop = *std::move(certified);
    if (loop.identity() != 1) {
        throw construction_invalid("identity", "identity is " + std::to_string(loop.identity()),
                                   {loop.identity()});
    }
    Element bad = 0, li = 0, ri = 0;
    if (!try_inverse_map(loop, &bad, &li, &ri)) {
        throw construction_invalid("inverses", "one-sided inverses differ", {bad, li, ri});
    }
    if (associativity_witness(loop, exec).holds) {
        throw construction_invalid("non_associativity", "table is associative");
    }
    return Construction{std::move(loop), std::move(trace)};
}

inline Construction construct_nafil(std::size_t m) { return construct_nafil(ConstructionParams{m, std::nullopt}); }

/// Writes every intermediate block, then the table, each under a
/// `# block: <name>` header.
inline void write_trace(std::ostream& out, const ConstructionTrace& t) {
    text::write_named_block(out, "L(m)", t.lm);
    text::write_named_block(out, "L(k)", t.lk);
    text::write_named_block(out, "L(k)'", t.lk_prime);
    text::write_named_block(out, "L(k)''", t.lk_double_prime);
    text::write_named_block(out, "C_k^T*", t.starred);
    text::write_named_block(out, "table", t.table.as_block());
}

}  // namespace nafil
