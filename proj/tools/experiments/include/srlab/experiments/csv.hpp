// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace srlab::experiments {

/// Shortest decimal that round-trips to the same double.
std::string format_real(double v);
/// C99 hex float, e.g. 0x1.99999ap-5.
std::string format_hex(double v);

/// RFC 4180 writer with one '#' comment line ahead of the header.
class CsvWriter {
  public:
    explicit CsvWriter(std::string comment);

    void header(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& cells);

    std::string str() const { return out_.str(); }

  private:
    std::ostringstream out_;
    std::size_t columns_ = 0;
};

}  // namespace srlab::experiments
