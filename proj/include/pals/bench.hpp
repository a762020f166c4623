#pragma once

#include <string>
#include <vector>

#include "pals/io.hpp"
#include "pals/pals_star.hpp"

namespace pals {

struct TrendPoint {
    double setting = 0.0;
    double mean_ls = 0.0;
    double mean_sensitivity = 0.0;
    double mean_time_s = 0.0;
};

struct TrendResult {
    std::string base;
    std::string axis;  // "n", "k" or "min_sensitivity"
    std::vector<TrendPoint> points;
    bool sensitivity_ok = true;  // 100% whenever the floor is 1
    bool ls_trend_ok = true;     // non-decreasing in n/k, non-increasing in the floor
};

// Desk-scale trend harness; caps n <= 200 and k <= 1000. The n/k axes run
// the plain pipelines, the min_sensitivity axis runs the starred ones.
TrendResult run_trend(PalsBase base, const std::string& axis,
                      const std::vector<double>& settings, const GeneratorSpec& spec,
                      const PalsParams& params = {});

}  // namespace pals
