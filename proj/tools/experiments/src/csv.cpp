// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#include "srlab/experiments/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace srlab::experiments {

std::string format_real(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string format_hex(double v) {
    std::array<char, 64> buf{};
    const int len = std::snprintf(buf.data(), buf.size(), "%a", v);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

namespace {

std::string quote(std::string_view cell) {
    if (cell.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(cell);
    }
    std::string q = "\"";
    for (const char c : cell) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    q += '"';
    return q;
}

void put_line(std::ostringstream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << quote(cells[i]);
    }
    out << "\r\n";
}

}  // namespace

CsvWriter::CsvWriter(std::string comment) {
    for (char& c : comment) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    out_ << "# " << comment << "\r\n";
}

void CsvWriter::header(const std::vector<std::string>& names) {
    columns_ = names.size();
    put_line(out_, names);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) {
        throw std::logic_error("CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                               std::to_string(columns_));
    }
    put_line(out_, cells);
}

}  // namespace srlab::experiments
