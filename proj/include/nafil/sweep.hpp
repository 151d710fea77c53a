#pragma once

/**
 * @file sweep.hpp
 * @brief Exhaustive search over all k-tuples of 1..n for the first tuple, in
 *        lexicographic order, that falsifies a predicate.
 *
 * The parallel sweep hands out leading coordinates in increasing order and
 * keeps a shared upper bound on the best leading coordinate found so far.
 * Every leading coordinate below the final bound is scanned in full, so the
 * reported witness is the same one the sequential sweep finds.
 */

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "types.hpp"

namespace nafil {

enum class Execution {
    automatic,   ///< parallel only when the tuple space is large
    sequential,
    parallel,
};

template <std::size_t Arity>
struct SweepOutcome {
    std::optional<std::array<Element, Arity>> witness;
    /// Tuples evaluated before stopping, counting the witness itself. This is
    /// the lexicographic rank of the witness plus one, so it does not depend
    /// on scheduling.
    std::uint64_t checked = 0;
};

namespace detail {

template <std::size_t Arity>
std::uint64_t tuple_space(std::size_t n) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < Arity; ++i) s *= n;
    return s;
}

template <std::size_t Arity>
std::uint64_t rank_of(const std::array<Element, Arity>& t, std::size_t n) {
    std::uint64_t r = 0;
    for (Element e : t) r = r * n + (e - 1);
    return r;
}

/// Scans every tuple whose first coordinate is `lead`, in lexicographic order.
template <std::size_t Arity, class Pred>
std::optional<std::array<Element, Arity>> scan_lead(std::size_t n, Element lead, const Pred& holds) {
    std::array<Element, Arity> t;
    t.fill(1);
    t[0] = lead;
    if constexpr (Arity == 1) {
        if (!holds(t)) return t;
        return std::nullopt;
    } else {
        for (;;) {
            if (!holds(t)) return t;
            std::size_t pos = Arity - 1;
            while (pos > 0 && t[pos] == n) {
                t[pos] = 1;
                --pos;
            }
            if (pos == 0) return std::nullopt;
            ++t[pos];
        }
    }
}

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : hw;
}

}  // namespace detail

/// Finds the lexicographically first tuple in {1..n}^Arity for which `holds`
/// returns false. `holds` must be safe to call concurrently.
template <std::size_t Arity, class Pred>
SweepOutcome<Arity> sweep(std::size_t n, const Pred& holds, Execution exec = Execution::automatic) {
    static_assert(Arity >= 1);
    SweepOutcome<Arity> out;
    if (n == 0) return out;
    const std::uint64_t space = detail::tuple_space<Arity>(n);

    bool parallel = exec == Execution::parallel ||
                    (exec == Execution::automatic && space >= (std::uint64_t{1} << 16));
    unsigned workers = std::min<unsigned>(detail::worker_count(), static_cast<unsigned>(n));
    if (workers < 2) parallel = false;

    if (!parallel) {
        for (Element lead = 1; lead <= n; ++lead) {
            if (auto w = detail::scan_lead<Arity>(n, lead, holds)) {
                out.witness = w;
                out.checked = detail::rank_of(*w, n) + 1;
                return out;
            }
        }
        out.checked = space;
        return out;
    }

    std::atomic<Element> next_lead{1};
    std::atomic<Element> best_lead{static_cast<Element>(n + 1)};
    std::mutex mu;
    std::optional<std::array<Element, Arity>> best;

    auto work = [&] {
        for (;;) {
            Element lead = next_lead.fetch_add(1);
            if (lead > n || lead > best_lead.load()) return;
            auto w = detail::scan_lead<Arity>(n, lead, holds);
            if (!w) continue;
            std::lock_guard lock(mu);
            if (!best || *w < *best) best = w;
            Element cur = best_lead.load();
            while (lead < cur && !best_lead.compare_exchange_weak(cur, lead)) {
            }
            return;
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    }
    out.witness = best;
    out.checked = best ? detail::rank_of(*best, n) + 1 : space;
    return out;
}

}  // namespace nafil
