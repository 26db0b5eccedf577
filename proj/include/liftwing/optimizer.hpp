#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liftwing/error.hpp"
#include "liftwing/trim.hpp"

namespace liftwing {

/// Rectangular (gamma, alpha) lattice, both axes inclusive of their endpoints.
struct SweepGrid {
    double gamma_min = 1.0;
    double gamma_max = 50.0;
    double gamma_step = 1.0;
    double alpha_min = 1.0;
    double alpha_max = 18.0;
    double alpha_step = 1.0;

    void validate() const;
    std::size_t gamma_count() const;
    std::size_t alpha_count() const;
    std::size_t cell_count() const { return gamma_count() * alpha_count(); }
    double gamma_at(std::size_t i) const noexcept { return gamma_min + static_cast<double>(i) * gamma_step; }
    double alpha_at(std::size_t j) const noexcept { return alpha_min + static_cast<double>(j) * alpha_step; }

    friend bool operator==(const SweepGrid&, const SweepGrid&) = default;
};

/// Where the grid starts: at one step (1..50 x 1..18, 900 cells) or at zero (969 cells).
enum class EndpointConvention { FromStep, FromZero };

SweepGrid make_grid(double gamma_max, double alpha_max, double step, EndpointConvention convention);

struct SweepCell {
    std::optional<TrimPoint> point; // set iff the cell is feasible
    std::optional<ErrorKind> reason; // set iff it is not

    bool feasible() const noexcept { return point.has_value(); }
    friend bool operator==(const SweepCell&, const SweepCell&) = default;
};

struct SweepArgmax {
    std::size_t gamma_index;
    std::size_t alpha_index;
    TrimPoint point;

    friend bool operator==(const SweepArgmax&, const SweepArgmax&) = default;
};

/// Cells are stored alpha-major: cells[alpha_index * gamma_count + gamma_index], so one
/// fixed-alpha range curve is a contiguous row.
struct SweepResult {
    SweepGrid grid;
    std::vector<SweepCell> cells;
    SweepArgmax argmax;
    double safety_alpha_cap;

    const SweepCell& cell(std::size_t gamma_index, std::size_t alpha_index) const {
        return cells.at(alpha_index * grid.gamma_count() + gamma_index);
    }
    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Evaluates every grid cell once through solve_trim (hover cells are recorded as
/// hover-degenerate), then picks the range maximum among cells with alpha at or below
/// the bundle's stall - margin cap. `jobs` threads share the work; the result does not
/// depend on it. Throws EmptyFeasibleSet if nothing qualifies.
SweepResult sweep(const ModelBundle& bundle, const SweepGrid& grid, unsigned jobs = 1);

/// Same cells, argmax recomputed under alpha <= stall - margin.
SweepResult apply_alpha_cap(const SweepResult& result, double stall_deg, double margin_deg);

struct CurvePoint {
    double gamma;
    std::optional<double> range; // empty when the cell is infeasible
};

/// The fixed-alpha row of the sweep, ordered by gamma. Throws AlphaNotOnGrid.
std::vector<CurvePoint> curve_extract(const SweepResult& result, double alpha_deg);

std::optional<std::size_t> alpha_index_of(const SweepGrid& grid, double alpha_deg);

} // namespace liftwing
