// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace srlab::experiments {

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
    bool line = false;
};

struct Plot {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = true;
    std::vector<Series> series;
};

/// Static scatter/line chart. Non-positive values are dropped on log axes.
std::string render_svg(const Plot& plot);

}  // namespace srlab::experiments
