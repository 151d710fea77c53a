#pragma once

/**
 * @file types.hpp
 * @brief Element labels, element sets and the exception hierarchy shared by
 *        every nafil header.
 *
 * Labels are 1-based positive integers at every API boundary, the same way
 * Cayley tables are written by hand.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nafil {

using Element = std::uint32_t;

/// Sorted, duplicate-free list of element labels.
using ElementSet = std::vector<Element>;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Index or element label outside the permitted range.
class range_error : public error {
public:
    using error::error;
};

/// Block shapes that cannot be combined.
class dimension_error : public error {
public:
    using error::error;
};

/// A table that fails the Latin property. Carries the first offending line.
class not_latin_error : public error {
public:
    enum class Line { row, column };

    not_latin_error(Line line, std::size_t index, Element label)
        : error(std::string("not a Latin square: ") + (line == Line::row ? "row " : "column ") +
                std::to_string(index) + " repeats label " + std::to_string(label)),
          line_(line), index_(index), label_(label) {}

    Line line() const noexcept { return line_; }
    std::size_t index() const noexcept { return index_; }
    Element label() const noexcept { return label_; }

private:
    Line line_;
    std::size_t index_;
    Element label_;
};

class not_a_loop_error : public error {
public:
    not_a_loop_error() : error("quasigroup has no two-sided identity element") {}
};

/// An element whose left and right inverses differ.
class not_invertible_error : public error {
public:
    not_invertible_error(Element x, Element left_inverse, Element right_inverse)
        : error("element " + std::to_string(x) + " has left inverse " + std::to_string(left_inverse) +
                " but right inverse " + std::to_string(right_inverse)),
          element_(x), left_(left_inverse), right_(right_inverse) {}

    Element element() const noexcept { return element_; }
    Element left_inverse() const noexcept { return left_; }
    Element right_inverse() const noexcept { return right_; }

private:
    Element element_;
    Element left_;
    Element right_;
};

/// Text-format input that does not parse. `line` is 1-based, 0 when unknown.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Order exceeds a configured exhaustive-search cap.
class cap_exceeded_error : public error {
public:
    cap_exceeded_error(std::size_t order, std::size_t cap)
        : error("order " + std::to_string(order) + " exceeds cap " + std::to_string(cap)),
          order_(order), cap_(cap) {}

    std::size_t order() const noexcept { return order_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t order_;
    std::size_t cap_;
};

}  // namespace nafil
