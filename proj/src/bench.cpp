#include "pals/bench.hpp"

#include <algorithm>
#include <stdexcept>

namespace pals {

namespace {

constexpr std::size_t kMaxN = 200;
constexpr std::size_t kMaxK = 1000;

}  // namespace

TrendResult run_trend(PalsBase base, const std::string& axis,
                      const std::vector<double>& settings, const GeneratorSpec& spec,
                      const PalsParams& params) {
    if (settings.empty()) throw std::invalid_argument("run_trend: no settings");
    if (axis != "n" && axis != "k" && axis != "min_sensitivity") {
        throw std::invalid_argument("run_trend: axis must be n, k or min_sensitivity");
    }

    TrendResult result;
    result.base = base == PalsBase::Lcs ? "lcs" : "scs";
    result.axis = axis;

    std::vector<double> ordered = settings;
    std::sort(ordered.begin(), ordered.end());

    for (double setting : ordered) {
        GeneratorSpec gs = spec;
        double floor = 1.0;
        if (axis == "n") {
            gs.n = static_cast<std::size_t>(setting);
        } else if (axis == "k") {
            gs.k = static_cast<std::size_t>(setting);
        } else {
            floor = setting;
        }
        if (gs.n > kMaxN || gs.k > kMaxK) {
            throw std::invalid_argument("run_trend: setting exceeds desk-scale caps");
        }

        TrendPoint point;
        point.setting = setting;
        const auto datasets = generate(gs);
        for (const auto& d : datasets) {
            PatternReport r;
            if (axis == "min_sensitivity") {
                r = pals_star(d, base, StarParams{floor}, params);
            } else {
                r = base == PalsBase::Lcs ? pals_lcs(d, params) : pals_scs(d, params);
            }
            point.mean_ls += r.ls;
            point.mean_sensitivity += r.sensitivity;
            point.mean_time_s += r.elapsed_s;
        }
        const auto reps = static_cast<double>(datasets.size());
        point.mean_ls /= reps;
        point.mean_sensitivity /= reps;
        point.mean_time_s /= reps;
        result.points.push_back(point);

        if (axis != "min_sensitivity" || floor >= 1.0 - 1e-9) {
            result.sensitivity_ok =
                result.sensitivity_ok && point.mean_sensitivity >= 1.0 - 1e-12;
        }
    }

    for (std::size_t i = 1; i < result.points.size(); ++i) {
        const double prev = result.points[i - 1].mean_ls;
        const double cur = result.points[i].mean_ls;
        // Along n/k the mean LS should grow; along the sensitivity floor it
        // should grow as well since points are sorted ascending (a looser
        // floor sits earlier and yields lower LS).
        result.ls_trend_ok = result.ls_trend_ok && cur >= prev - 1e-9;
    }
    return result;
}

}  // namespace pals
