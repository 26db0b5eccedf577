#include "liftwing/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace liftwing {

namespace {

std::size_t axis_count(double lo, double hi, double step, const char* axis) {
    const double span = (hi - lo) / step;
    const double rounded = std::round(span);
    if (std::abs(span - rounded) > 1e-9 * std::max(1.0, rounded)) {
        std::ostringstream os;
        os << axis << " range is not a whole number of steps";
        throw Error(ErrorKind::ConfigError, os.str());
    }
    return static_cast<std::size_t>(rounded) + 1;
}

std::optional<SweepArgmax> find_argmax(const SweepGrid& grid, const std::vector<SweepCell>& cells,
                                       double alpha_cap) {
    std::optional<SweepArgmax> best;
    const std::size_t ng = grid.gamma_count();
    const std::size_t na = grid.alpha_count();
    // gamma outer, alpha inner with strict improvement: ties keep the smallest gamma,
    // then the smallest alpha.
    for (std::size_t i = 0; i < ng; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const SweepCell& c = cells[j * ng + i];
            if (!c.feasible() || grid.alpha_at(j) > alpha_cap) continue;
            if (!best || c.point->range > best->point.range) best = SweepArgmax{i, j, *c.point};
        }
    }
    return best;
}

SweepCell evaluate_cell(const ModelBundle& bundle, double gamma, double alpha) {
    try {
        TrimPoint p = solve_trim(bundle, gamma, alpha);
        if (p.regime == Regime::Hover) return {std::nullopt, ErrorKind::HoverDegenerate};
        return {std::move(p), std::nullopt};
    } catch (const Error& e) {
        return {std::nullopt, e.kind()};
    }
}

} // namespace

void SweepGrid::validate() const {
    for (double v : {gamma_min, gamma_max, gamma_step, alpha_min, alpha_max, alpha_step})
        if (!std::isfinite(v)) throw Error(ErrorKind::ConfigError, "grid values must be finite");
    if (!(gamma_step > 0.0) || !(alpha_step > 0.0))
        throw Error(ErrorKind::ConfigError, "grid steps must be positive");
    if (gamma_min > gamma_max || alpha_min > alpha_max)
        throw Error(ErrorKind::ConfigError, "grid requires min <= max on both axes");
    axis_count(gamma_min, gamma_max, gamma_step, "gamma");
    axis_count(alpha_min, alpha_max, alpha_step, "alpha");
}

std::size_t SweepGrid::gamma_count() const { return axis_count(gamma_min, gamma_max, gamma_step, "gamma"); }
std::size_t SweepGrid::alpha_count() const { return axis_count(alpha_min, alpha_max, alpha_step, "alpha"); }

SweepGrid make_grid(double gamma_max, double alpha_max, double step, EndpointConvention convention) {
    const double start = convention == EndpointConvention::FromStep ? step : 0.0;
    SweepGrid grid{start, gamma_max, step, start, alpha_max, step};
    grid.validate();
    return grid;
}

SweepResult sweep(const ModelBundle& bundle, const SweepGrid& grid, unsigned jobs) {
    grid.validate();
    const std::size_t ng = grid.gamma_count();
    const std::size_t total = grid.cell_count();
    std::vector<SweepCell> cells(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next.fetch_add(1); k < total; k = next.fetch_add(1))
            cells[k] = evaluate_cell(bundle, grid.gamma_at(k % ng), grid.alpha_at(k / ng));
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    const double cap = bundle.airframe.alpha_cap();
    auto best = find_argmax(grid, cells, cap);
    if (!best) throw Error(ErrorKind::EmptyFeasibleSet, "no feasible cell under the attack-angle cap");
    return SweepResult{grid, std::move(cells), *best, cap};
}

SweepResult apply_alpha_cap(const SweepResult& result, double stall_deg, double margin_deg) {
    if (!(margin_deg >= 0.0) || !(margin_deg < stall_deg))
        throw Error(ErrorKind::EmptyFeasibleSet, "safety margin must satisfy 0 <= margin < stall");
    const double cap = stall_deg - margin_deg;
    auto best = find_argmax(result.grid, result.cells, cap);
    if (!best) throw Error(ErrorKind::EmptyFeasibleSet, "no feasible cell under the attack-angle cap");
    SweepResult out = result;
    out.argmax = *best;
    out.safety_alpha_cap = cap;
    return out;
}

std::optional<std::size_t> alpha_index_of(const SweepGrid& grid, double alpha_deg) {
    const double pos = (alpha_deg - grid.alpha_min) / grid.alpha_step;
    const double idx = std::round(pos);
    if (std::abs(pos - idx) > 1e-9 || idx < 0.0 || idx >= static_cast<double>(grid.alpha_count()))
        return std::nullopt;
    return static_cast<std::size_t>(idx);
}

std::vector<CurvePoint> curve_extract(const SweepResult& result, double alpha_deg) {
    const auto j = alpha_index_of(result.grid, alpha_deg);
    if (!j) {
        std::ostringstream os;
        os << "alpha " << alpha_deg << " deg is not on the sweep grid";
        throw Error(ErrorKind::AlphaNotOnGrid, os.str());
    }
    std::vector<CurvePoint> curve;
    const std::size_t ng = result.grid.gamma_count();
    curve.reserve(ng);
    for (std::size_t i = 0; i < ng; ++i) {
        const SweepCell& c = result.cell(i, *j);
        curve.push_back({result.grid.gamma_at(i),
                         c.feasible() ? std::optional<double>(c.point->range) : std::nullopt});
    }
    return curve;
}

} // namespace liftwing
