#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liftwing/fitting.hpp"
#include "liftwing/optimizer.hpp"
#include "liftwing/trim.hpp"

namespace liftwing {

/// Shortest text that round-trips the double; independent of the global locale.
std::string format_number(double value);

nlohmann::json trim_to_json(const TrimPoint& p);
nlohmann::json fit_report_to_json(const FitReport& r);

/// gamma,alpha,theta,V,rpm,torque,current,endurance,range,status
extern const char* const kCellCsvHeader;
std::string cell_csv_row(double gamma, double alpha, const SweepCell& cell);
void write_cells_csv(std::ostream& out, const SweepResult& result);
void write_curve_csv(std::ostream& out, const SweepResult& result, double alpha_deg);
void write_trim_csv(std::ostream& out, const TrimPoint& p);

nlohmann::json sweep_summary(const SweepResult& result);

/// Human-readable, column-aligned listing of a trim point.
void write_trim_text(std::ostream& out, const TrimPoint& p);

struct CompareRow {
    double speed;
    std::optional<TrimPoint> wing;
    std::optional<TrimPoint> wingless;
    std::string wing_status = "ok";
    std::string wingless_status = "ok";

    /// (I_wingless - I_wing) / I_wingless, in percent; empty unless both trims exist.
    std::optional<double> saving_percent() const;
};

/// A current in A expressed as battery charge rate in mAh/s.
constexpr double amps_to_mah_per_s(double amps) noexcept { return amps * 1000.0 / 3600.0; }

extern const char* const kCompareCsvHeader;
void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);
void write_compare_text(std::ostream& out, const std::vector<CompareRow>& rows, double gamma_deg);
nlohmann::json compare_to_json(const std::vector<CompareRow>& rows, double gamma_deg);

} // namespace liftwing
