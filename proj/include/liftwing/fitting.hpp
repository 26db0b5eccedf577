#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liftwing/aero.hpp"
#include "liftwing/propulsion.hpp"

namespace liftwing {

// ---------------------------------------------------------------------------
// Units
// ---------------------------------------------------------------------------

/// SI unit a source unit converts to ("m/s", "N", "N*m", "RPM", "deg", "A", "-").
/// Throws UnknownUnit.
std::string canonical_unit(std::string_view unit);
double to_si(double value, std::string_view unit);
double from_si(double value, std::string_view unit);

// ---------------------------------------------------------------------------
// Sample tables
// ---------------------------------------------------------------------------

struct Column {
    std::string name;
    std::string unit;

    friend bool operator==(const Column&, const Column&) = default;
};

/// Rectangular table of SI values with named, unit-tagged columns.
class SampleTable {
public:
    SampleTable() = default;
    explicit SampleTable(std::vector<Column> columns);

    const std::vector<Column>& columns() const noexcept { return columns_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }
    const std::vector<double>& row(std::size_t i) const { return rows_.at(i); }

    void add_row(std::vector<double> values);
    std::size_t column_index(std::string_view name) const;
    std::vector<double> column(std::string_view name) const;

private:
    std::vector<Column> columns_;
    std::vector<std::vector<double>> rows_;
};

/// Which source columns of a manufacturer performance file hold the quantities we need.
/// When `rpm` is empty the rotor speed comes from each block's "PROP RPM = ..." header.
struct PropColumnMap {
    std::string vp = "V";
    std::string thrust = "Thrust";
    std::string torque = "Torque";
    std::string rpm;
};

/// Source units by column name; overrides (or replaces a missing) units line.
using UnitMap = std::map<std::string, std::string, std::less<>>;

/// Parses a whitespace-delimited performance file organised in per-RPM blocks into a
/// table with columns vp[m/s], rpm[RPM], thrust[N], torque[N*m].
SampleTable parse_propeller_table(std::istream& in, const PropColumnMap& columns = {},
                                  const UnitMap& units = {});

/// Parses a CSV whose header cells read `name:unit`; values are converted to SI.
SampleTable parse_csv_table(std::istream& in);

// ---------------------------------------------------------------------------
// Least squares
// ---------------------------------------------------------------------------

struct FitReport {
    std::vector<double> coefficients;
    double r_squared = 0.0;
    double pearson_r = 0.0;
    double max_abs_residual = 0.0;
    std::size_t sample_count = 0;
};

/// argmin ||X c - y|| by column-pivoted Householder QR on a column-scaled design.
/// Throws RankDeficient if X has fewer rows than columns or loses rank.
std::vector<double> least_squares(const std::vector<std::vector<double>>& design,
                                  const std::vector<double>& observed);

/// 1 - SS_res / SS_tot. Throws DegenerateVariance when `observed` is constant.
double r_squared(const std::vector<double>& predicted, const std::vector<double>& observed);
double pearson_r(const std::vector<double>& predicted, const std::vector<double>& observed);

struct AeroFit {
    LinearAeroModel model;
    FitReport lift;
    FitReport drag;
};

/// Straight lines through (alpha, cl) and (alpha, cd). Coefficients are {slope, intercept}.
AeroFit fit_linear_aero(const SampleTable& samples);

/// (vp_exp, rpm_exp) monomials to fit.
using Basis = std::vector<std::pair<int, int>>;

struct SurrogateFit {
    PolySurrogate surrogate;
    FitReport report;
};

/// Fits `target` (a column such as "thrust" or "torque") against vp and rpm over the
/// basis. Domains are the sample extents; coefficients follow the basis order.
SurrogateFit fit_poly_surrogate(const SampleTable& samples, const Basis& basis,
                                std::string_view target);

struct EscFit {
    EscCurrentModel model;
    FitReport report;
};

/// Quadratic current-vs-torque fit; coefficients are {quad, lin, const}.
EscFit fit_esc_quadratic(const SampleTable& samples);

} // namespace liftwing
