#pragma once

/**
 * @file text_format.hpp
 * @brief Plain-text Cayley table reader/writer.
 *
 * Format:
 *
 *     # optional comment lines, only before the order line
 *     n
 *     a11 a12 ... a1n
 *     ...
 *     an1 an2 ... ann
 *
 * Entries are decimal labels in 1..n separated by single spaces; the file
 * ends with a newline. The reader accepts any run of spaces or tabs between
 * entries and CRLF line ends; the writer always emits the canonical form.
 */

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "latin.hpp"

namespace nafil::text {

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::size_t parse_count(std::string_view field, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw parse_error(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace detail

inline Table parse_table(std::string_view text) {
    if (text.empty() || text.back() != '\n') throw parse_error(0, "input must end with a newline");
    for (unsigned char c : text) {
        if (c >= 0x80) throw parse_error(0, "input must be 7-bit text");
    }

    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }

    std::size_t at = 0;
    while (at < lines.size() && !lines[at].empty() && lines[at].front() == '#') ++at;
    if (at == lines.size()) throw parse_error(lines.size(), "missing order line");

    auto header = detail::split_fields(lines[at]);
    if (header.size() != 1) throw parse_error(at + 1, "order line must hold a single integer");
    const std::size_t n = detail::parse_count(header.front(), at + 1);
    if (n < 1) throw parse_error(at + 1, "order must be at least 1");
    ++at;

    std::vector<Element> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r, ++at) {
        if (at >= lines.size()) {
            throw parse_error(at + 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
        }
        auto fields = detail::split_fields(lines[at]);
        if (fields.size() != n) {
            throw parse_error(at + 1, "expected " + std::to_string(n) + " entries, found " +
                                          std::to_string(fields.size()));
        }
        for (auto f : fields) {
            std::size_t v = detail::parse_count(f, at + 1);
            if (v < 1 || v > n) {
                throw parse_error(at + 1, "entry " + std::string(f) + " outside 1.." + std::to_string(n));
            }
            entries.push_back(static_cast<Element>(v));
        }
    }
    for (; at < lines.size(); ++at) {
        if (!detail::split_fields(lines[at]).empty()) throw parse_error(at + 1, "unexpected trailing content");
    }
    return Table(n, std::move(entries));
}

inline Table read_table(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str());
}

inline Table read_table_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(0, "cannot open '" + path + "'");
    return read_table(in);
}

inline void write_rows(std::ostream& out, const Block& b) {
    for (std::size_t i = 1; i <= b.rows(); ++i) {
        for (std::size_t j = 1; j <= b.cols(); ++j) {
            if (j > 1) out << ' ';
            out << b.at(i, j);
        }
        out << '\n';
    }
}

inline void write_table(std::ostream& out, const Table& t) {
    out << t.order() << '\n';
    write_rows(out, t.as_block());
}

inline std::string format_table(const Table& t) {
    std::ostringstream ss;
    write_table(ss, t);
    return ss.str();
}

/// One named block of a multi-block document: `# block: <name>`, then a
/// `rows cols` line, then the rows.
inline void write_named_block(std::ostream& out, const std::string& name, const Block& b) {
    out << "# block: " << name << '\n' << b.rows() << ' ' << b.cols() << '\n';
    write_rows(out, b);
}

}  // namespace nafil::text
