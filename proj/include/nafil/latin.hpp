#pragma once

/**
 * @file latin.hpp
 * @brief Rectangular label arrays, Latin-square validation and the block
 *        algebra (transpose, row/column deletion, substitution, 2x2 assembly).
 *
 * Every row and column index taken by this header is 1-based. Blocks and
 * tables are immutable values; each operation returns a fresh object.
 */

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "types.hpp"

namespace nafil {

/// An r x c fragment of a Cayley table over an explicitly declared label set.
///
/// The universe is declared rather than inferred: a cyclic block with one row
/// deleted still draws from all of its labels.
class Block {
public:
    Block() = default;

    Block(std::size_t rows, std::size_t cols, std::vector<Element> entries, ElementSet universe)
        : rows_(rows), cols_(cols), entries_(std::move(entries)), universe_(std::move(universe)) {
        std::sort(universe_.begin(), universe_.end());
        universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
        if (entries_.size() != rows_ * cols_) {
            throw dimension_error("block entries: expected " + std::to_string(rows_ * cols_) + ", got " +
                                  std::to_string(entries_.size()));
        }
        for (Element e : entries_) {
            if (!std::binary_search(universe_.begin(), universe_.end(), e)) {
                throw range_error("block entry " + std::to_string(e) + " is not in the declared universe");
            }
        }
    }

    /// Builds a block from literal rows; the universe is 1..max(entry) unless given.
    static Block from_rows(std::initializer_list<std::initializer_list<Element>> rows,
                           std::optional<ElementSet> universe = std::nullopt) {
        std::vector<std::vector<Element>> v;
        for (auto r : rows) v.emplace_back(r);
        return from_rows(v, std::move(universe));
    }

    static Block from_rows(const std::vector<std::vector<Element>>& rows,
                           std::optional<ElementSet> universe = std::nullopt) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.front().size();
        std::vector<Element> entries;
        entries.reserve(r * c);
        Element hi = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw dimension_error("ragged rows");
            for (Element e : row) {
                entries.push_back(e);
                hi = std::max(hi, e);
            }
        }
        if (!universe) {
            universe.emplace();
            for (Element e = 1; e <= hi; ++e) universe->push_back(e);
        }
        return Block(r, c, std::move(entries), std::move(*universe));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const ElementSet& universe() const noexcept { return universe_; }
    std::span<const Element> entries() const noexcept { return entries_; }

    /// Entry at 1-based (i, j).
    Element at(std::size_t i, std::size_t j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_) {
            throw range_error("block position (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range for " + std::to_string(rows_) + "x" + std::to_string(cols_));
        }
        return entries_[(i - 1) * cols_ + (j - 1)];
    }

    std::span<const Element> row(std::size_t i) const {
        if (i < 1 || i > rows_) throw range_error("row " + std::to_string(i) + " out of range");
        return std::span<const Element>(entries_).subspan((i - 1) * cols_, cols_);
    }

    bool operator==(const Block&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> entries_;
    ElementSet universe_;
};

/// Square n x n array over the labels 1..n. Not necessarily Latin.
class Table {
public:
    Table() = default;

    Table(std::size_t n, std::vector<Element> entries) : n_(n), entries_(std::move(entries)) {
        if (n_ < 1) throw dimension_error("table order must be at least 1");
        if (entries_.size() != n_ * n_) {
            throw dimension_error("table of order " + std::to_string(n_) + " needs " + std::to_string(n_ * n_) +
                                  " entries, got " + std::to_string(entries_.size()));
        }
        for (Element e : entries_) {
            if (e < 1 || e > n_) {
                throw range_error("table entry " + std::to_string(e) + " outside 1.." + std::to_string(n_));
            }
        }
    }

    static Table from_rows(const std::vector<std::vector<Element>>& rows) {
        std::vector<Element> entries;
        for (const auto& r : rows) {
            if (r.size() != rows.size()) throw dimension_error("table rows must have length n");
            entries.insert(entries.end(), r.begin(), r.end());
        }
        return Table(rows.size(), std::move(entries));
    }

    static Table from_rows(std::initializer_list<std::initializer_list<Element>> rows) {
        std::vector<std::vector<Element>> v;
        for (auto r : rows) v.emplace_back(r);
        return from_rows(v);
    }

    explicit Table(const Block& b) {
        if (b.rows() != b.cols()) throw dimension_error("a table must be square");
        *this = Table(b.rows(), std::vector<Element>(b.entries().begin(), b.entries().end()));
    }

    std::size_t order() const noexcept { return n_; }
    std::span<const Element> entries() const noexcept { return entries_; }

    Element at(std::size_t i, std::size_t j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) {
            throw range_error("table position (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range for order " + std::to_string(n_));
        }
        return entries_[(i - 1) * n_ + (j - 1)];
    }

    /// Unchecked 1-based access for hot loops.
    Element operator()(Element i, Element j) const noexcept { return entries_[(i - 1) * n_ + (j - 1)]; }

    std::span<const Element> row(std::size_t i) const {
        if (i < 1 || i > n_) throw range_error("row " + std::to_string(i) + " out of range");
        return std::span<const Element>(entries_).subspan((i - 1) * n_, n_);
    }

    Block as_block() const {
        ElementSet u(n_);
        for (std::size_t i = 0; i < n_; ++i) u[i] = static_cast<Element>(i + 1);
        return Block(n_, n_, entries_, std::move(u));
    }

    bool operator==(const Table&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Element> entries_;
};

/// First repeated label in a row (rows scanned first) or column.
struct LatinViolation {
    not_latin_error::Line line;
    std::size_t index;
    Element label;
};

inline std::optional<LatinViolation> find_latin_violation(const Block& b) {
    std::vector<std::size_t> seen_at;
    Element hi = b.universe().empty() ? 0 : b.universe().back();
    seen_at.assign(hi + 1, 0);
    std::size_t stamp = 0;
    for (std::size_t i = 1; i <= b.rows(); ++i) {
        ++stamp;
        for (std::size_t j = 1; j <= b.cols(); ++j) {
            Element e = b.at(i, j);
            if (seen_at[e] == stamp) return LatinViolation{not_latin_error::Line::row, i, e};
            seen_at[e] = stamp;
        }
    }
    for (std::size_t j = 1; j <= b.cols(); ++j) {
        ++stamp;
        for (std::size_t i = 1; i <= b.rows(); ++i) {
            Element e = b.at(i, j);
            if (seen_at[e] == stamp) return LatinViolation{not_latin_error::Line::column, j, e};
            seen_at[e] = stamp;
        }
    }
    return std::nullopt;
}

/// True iff no row and no column repeats a label.
inline bool is_latin(const Block& b) { return !find_latin_violation(b).has_value(); }

inline bool is_latin(const Table& t) { return is_latin(t.as_block()); }

/// First row and first column both read 1, 2, ..., n.
inline bool is_standard_form(const Table& t) {
    for (std::size_t i = 1; i <= t.order(); ++i) {
        if (t.at(1, i) != i || t.at(i, 1) != i) return false;
    }
    return true;
}

inline Block transpose(const Block& b) {
    std::vector<Element> out(b.rows() * b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) out[j * b.rows() + i] = b.entries()[i * b.cols() + j];
    }
    return Block(b.cols(), b.rows(), std::move(out), b.universe());
}

/// Removes 1-based row r. Deleting the last row yields a 0 x c block.
inline Block delete_row(const Block& b, std::size_t r) {
    if (r < 1 || r > b.rows()) {
        throw range_error("delete_row: row " + std::to_string(r) + " out of range 1.." + std::to_string(b.rows()));
    }
    std::vector<Element> out;
    out.reserve((b.rows() - 1) * b.cols());
    for (std::size_t i = 1; i <= b.rows(); ++i) {
        if (i == r) continue;
        auto row = b.row(i);
        out.insert(out.end(), row.begin(), row.end());
    }
    return Block(b.rows() - 1, b.cols(), std::move(out), b.universe());
}

inline Block delete_column(const Block& b, std::size_t c) {
    if (c < 1 || c > b.cols()) {
        throw range_error("delete_column: column " + std::to_string(c) + " out of range 1.." +
                          std::to_string(b.cols()));
    }
    std::vector<Element> out;
    out.reserve(b.rows() * (b.cols() - 1));
    for (std::size_t i = 1; i <= b.rows(); ++i) {
        for (std::size_t j = 1; j <= b.cols(); ++j) {
            if (j != c) out.push_back(b.at(i, j));
        }
    }
    return Block(b.rows(), b.cols() - 1, std::move(out), b.universe());
}

struct Assignment {
    std::size_t row;
    std::size_t col;
    Element label;
};

/// Overwrites the given 1-based positions. The result's universe is the old
/// universe plus every new label. Latin-ness of the result is not checked.
inline Block substitute(const Block& b, std::span<const Assignment> assignments) {
    std::vector<Element> out(b.entries().begin(), b.entries().end());
    std::vector<bool> touched(out.size(), false);
    ElementSet universe = b.universe();
    for (const auto& a : assignments) {
        if (a.row < 1 || a.row > b.rows() || a.col < 1 || a.col > b.cols()) {
            throw range_error("substitute: position (" + std::to_string(a.row) + ", " + std::to_string(a.col) +
                              ") out of range");
        }
        if (a.label < 1) throw range_error("substitute: labels are positive");
        std::size_t idx = (a.row - 1) * b.cols() + (a.col - 1);
        if (touched[idx]) {
            throw range_error("substitute: position (" + std::to_string(a.row) + ", " + std::to_string(a.col) +
                              ") assigned twice");
        }
        touched[idx] = true;
        out[idx] = a.label;
        universe.push_back(a.label);
    }
    return Block(b.rows(), b.cols(), std::move(out), std::move(universe));
}

inline Block substitute(const Block& b, std::initializer_list<Assignment> assignments) {
    return substitute(b, std::span<const Assignment>(assignments.begin(), assignments.size()));
}

/// Places four blocks in a 2x2 layout:
///
///     top_left (m x m)     | top_right (m x k)
///     bottom_left (k x m)  | bottom_right (k x k)
inline Table assemble(const Block& top_left, const Block& top_right, const Block& bottom_left,
                      const Block& bottom_right) {
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw dimension_error("assemble: " + what);
    };
    for (const Block* b : {&top_left, &top_right, &bottom_left, &bottom_right}) {
        require(b->rows() > 0 && b->cols() > 0, "blocks must be non-empty");
    }
    const std::size_t m = top_left.rows();
    const std::size_t k = bottom_right.rows();
    require(top_left.cols() == m, "top_left must be square");
    require(bottom_right.cols() == k, "bottom_right must be square");
    require(top_right.rows() == m, "top_left and top_right row counts differ");
    require(top_right.cols() == k, "top_right and bottom_right column counts differ");
    require(bottom_left.rows() == k, "bottom_left and bottom_right row counts differ");
    require(bottom_left.cols() == m, "bottom_left and top_left column counts differ");

    const std::size_t n = m + k;
    std::vector<Element> out(n * n);
    auto place = [&](const Block& b, std::size_t r0, std::size_t c0) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) out[(r0 + i) * n + c0 + j] = b.entries()[i * b.cols() + j];
        }
    };
    place(top_left, 0, 0);
    place(top_right, 0, m);
    place(bottom_left, m, 0);
    place(bottom_right, m, m);
    return Table(n, std::move(out));
}

/// Copies the 1-based rectangle [r0, r0+rows) x [c0, c0+cols) out of a table.
inline Block region(const Table& t, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols,
                    ElementSet universe) {
    std::vector<Element> out;
    out.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) out.push_back(t.at(r0 + i, c0 + j));
    }
    return Block(rows, cols, std::move(out), std::move(universe));
}

}  // namespace nafil
