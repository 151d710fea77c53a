#pragma once

/**
 * @file algebra.hpp
 * @brief Integer loop algebra A(L), its commutator algebra and the Jacobi
 *        identity.
 *
 * Basis vectors e_1..e_n multiply as e_i e_j = e_{i*j}. The commutator
 * algebra uses [a, b] = ab - ba. All arithmetic is exact over the integers.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "loop.hpp"
#include "sweep.hpp"

namespace nafil {

using Coefficient = std::int64_t;

/// Dense n x n x n tensor c[i][j][k], 1-based at the interface.
class StructureTensor {
public:
    StructureTensor() = default;
    explicit StructureTensor(std::size_t n) : n_(n), c_(n * n * n, 0) {}

    std::size_t dimension() const noexcept { return n_; }

    Coefficient operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return c_[((i - 1) * n_ + (j - 1)) * n_ + (k - 1)];
    }
    Coefficient& operator()(std::size_t i, std::size_t j, std::size_t k) noexcept {
        return c_[((i - 1) * n_ + (j - 1)) * n_ + (k - 1)];
    }

    bool operator==(const StructureTensor&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Coefficient> c_;
};

inline StructureTensor structure_constants(const Loop& l) {
    const std::size_t n = l.order();
    StructureTensor t(n);
    for (Element i = 1; i <= n; ++i) {
        for (Element j = 1; j <= n; ++j) t(i, j, l.mul(i, j)) = 1;
    }
    return t;
}

/// d[i][j][k] = c[i][j][k] - c[j][i][k].
inline StructureTensor commutator_constants(const StructureTensor& c) {
    const std::size_t n = c.dimension();
    StructureTensor d(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            for (std::size_t k = 1; k <= n; ++k) d(i, j, k) = c(i, j, k) - c(j, i, k);
        }
    }
    return d;
}

struct JacobiResult {
    bool holds = true;
    /// First basis triple (i, j, l) whose Jacobiator is nonzero.
    std::optional<std::array<Element, 3>> triple;
    /// Coefficients of J(i, j, l) on e_1..e_n, for the witness triple.
    std::vector<Coefficient> coefficients;
    std::uint64_t checked_count = 0;
};

namespace detail {

/// Sparse bracket rows: for each (i, j), the nonzero (k, d[i][j][k]).
class BracketRows {
public:
    explicit BracketRows(const StructureTensor& d) : n_(d.dimension()), rows_(n_ * n_) {
        for (std::size_t i = 1; i <= n_; ++i) {
            for (std::size_t j = 1; j <= n_; ++j) {
                for (std::size_t k = 1; k <= n_; ++k) {
                    if (Coefficient v = d(i, j, k)) rows_[(i - 1) * n_ + (j - 1)].push_back({k, v});
                }
            }
        }
    }

    struct Term {
        std::size_t basis;
        Coefficient coeff;
    };

    const std::vector<Term>& operator()(std::size_t i, std::size_t j) const { return rows_[(i - 1) * n_ + (j - 1)]; }

    /// acc += [[e_i, e_j], e_l].
    void add_double_bracket(std::vector<Coefficient>& acc, std::size_t i, std::size_t j, std::size_t l) const {
        for (const Term& a : (*this)(i, j)) {
            for (const Term& b : (*this)(a.basis, l)) acc[b.basis - 1] += a.coeff * b.coeff;
        }
    }

private:
    std::size_t n_;
    std::vector<std::vector<Term>> rows_;
};

inline std::vector<Coefficient> jacobiator(const BracketRows& br, std::size_t n, std::size_t i, std::size_t j,
                                           std::size_t l) {
    std::vector<Coefficient> acc(n, 0);
    br.add_double_bracket(acc, i, j, l);
    br.add_double_bracket(acc, j, l, i);
    br.add_double_bracket(acc, l, i, j);
    return acc;
}

}  // namespace detail

/// Coefficients of J(i, j, l) on e_1..e_n.
inline std::vector<Coefficient> jacobiator(const StructureTensor& d, std::size_t i, std::size_t j, std::size_t l) {
    return detail::jacobiator(detail::BracketRows(d), d.dimension(), i, j, l);
}

/// Evaluates [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] for every
/// basis triple. Bilinearity makes basis triples sufficient.
inline JacobiResult jacobi_holds(const StructureTensor& d, Execution exec = Execution::automatic) {
    const std::size_t n = d.dimension();
    const detail::BracketRows br(d);
    auto r = sweep<3>(
        n,
        [&](const std::array<Element, 3>& t) {
            auto acc = detail::jacobiator(br, n, t[0], t[1], t[2]);
            for (Coefficient c : acc) {
                if (c != 0) return false;
            }
            return true;
        },
        exec);

    JacobiResult out;
    out.holds = !r.witness;
    out.checked_count = r.checked;
    if (r.witness) {
        out.triple = r.witness;
        out.coefficients = detail::jacobiator(br, n, (*r.witness)[0], (*r.witness)[1], (*r.witness)[2]);
    }
    return out;
}

inline JacobiResult jacobi_holds(const Loop& l, Execution exec = Execution::automatic) {
    return jacobi_holds(commutator_constants(structure_constants(l)), exec);
}

/// One line per pair i < j: `[e2, e3] = e5 - e4`. Terms appear in basis
/// order with positive terms first; a zero bracket prints as `0`.
inline void write_commutator_table(std::ostream& out, const StructureTensor& d) {
    const std::size_t n = d.dimension();
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            out << "[e" << i << ", e" << j << "] =";
            bool first = true;
            for (int sign : {1, -1}) {
                for (std::size_t k = 1; k <= n; ++k) {
                    Coefficient v = d(i, j, k);
                    if (v == 0 || (v > 0) != (sign > 0)) continue;
                    Coefficient mag = v < 0 ? -v : v;
                    if (first) {
                        out << (v < 0 ? " -" : " ");
                    } else {
                        out << (v < 0 ? " - " : " + ");
                    }
                    if (mag != 1) out << mag;
                    out << 'e' << k;
                    first = false;
                }
            }
            if (first) out << " 0";
            out << '\n';
        }
    }
}

inline std::string format_commutator_table(const StructureTensor& d) {
    std::ostringstream ss;
    write_commutator_table(ss, d);
    return ss.str();
}

}  // namespace nafil
