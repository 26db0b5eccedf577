#include "liftwing/report.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace liftwing {

using nlohmann::json;

const char* const kCellCsvHeader = "gamma,alpha,theta,V,rpm,torque,current,endurance,range,status";
const char* const kCompareCsvHeader =
    "speed_m_s,wing_current_A,wing_current_mAh_s,wingless_current_A,wingless_current_mAh_s,"
    "saving_percent,wing_status,wingless_status";

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

json trim_to_json(const TrimPoint& p) {
    return {{"regime", p.regime == Regime::Hover ? "hover" : "cruise"},
            {"gamma_deg", p.gamma},
            {"alpha_deg", p.alpha},
            {"theta_deg", p.theta},
            {"airspeed_m_s", p.airspeed},
            {"axial_inflow_m_s", p.axial_inflow},
            {"lift_N", p.lift},
            {"drag_N", p.drag},
            {"thrust_per_rotor_N", p.thrust_per_rotor},
            {"rpm", p.rpm},
            {"torque_per_rotor_Nm", p.torque_per_rotor},
            {"current_per_esc_A", p.current_per_esc},
            {"total_current_A", p.total_current},
            {"endurance_s", p.endurance},
            {"range_m", p.range}};
}

json fit_report_to_json(const FitReport& r) {
    return {{"coefficients", r.coefficients},
            {"r_squared", r.r_squared},
            {"pearson_r", r.pearson_r},
            {"max_abs_residual", r.max_abs_residual},
            {"sample_count", r.sample_count}};
}

std::string cell_csv_row(double gamma, double alpha, const SweepCell& cell) {
    std::string row = format_number(gamma) + ',' + format_number(alpha) + ',';
    if (cell.feasible()) {
        const TrimPoint& p = *cell.point;
        for (double v : {p.theta, p.airspeed, p.rpm, p.torque_per_rotor, p.current_per_esc,
                         p.endurance, p.range})
            row += format_number(v) + ',';
        row += "ok";
    } else {
        row += ",,,,,,,";
        row += to_string(*cell.reason);
    }
    return row;
}

void write_cells_csv(std::ostream& out, const SweepResult& result) {
    out << kCellCsvHeader << '\n';
    const SweepGrid& g = result.grid;
    for (std::size_t j = 0; j < g.alpha_count(); ++j)
        for (std::size_t i = 0; i < g.gamma_count(); ++i)
            out << cell_csv_row(g.gamma_at(i), g.alpha_at(j), result.cell(i, j)) << '\n';
}

void write_curve_csv(std::ostream& out, const SweepResult& result, double alpha_deg) {
    const auto j = alpha_index_of(result.grid, alpha_deg);
    out << "gamma,range,status\n";
    for (const CurvePoint& c : curve_extract(result, alpha_deg)) {
        out << format_number(c.gamma) << ',';
        if (c.range) {
            out << format_number(*c.range) << ",ok\n";
        } else {
            const auto i = static_cast<std::size_t>(std::llround((c.gamma - result.grid.gamma_min) / result.grid.gamma_step));
            out << ',' << to_string(*result.cell(i, *j).reason) << '\n';
        }
    }
}

void write_trim_csv(std::ostream& out, const TrimPoint& p) {
    out << "gamma,alpha,theta,V,thrust_per_rotor,rpm,torque,current,total_current,endurance,range\n";
    bool first = true;
    for (double v : {p.gamma, p.alpha, p.theta, p.airspeed, p.thrust_per_rotor, p.rpm, p.torque_per_rotor,
                     p.current_per_esc, p.total_current, p.endurance, p.range}) {
        if (!first) out << ',';
        out << format_number(v);
        first = false;
    }
    out << '\n';
}

json sweep_summary(const SweepResult& result) {
    const TrimPoint& p = result.argmax.point;
    std::size_t feasible = 0;
    for (const auto& c : result.cells) feasible += c.feasible() ? 1 : 0;
    return {{"gamma_deg", p.gamma},
            {"alpha_deg", p.alpha},
            {"theta_deg", p.theta},
            {"airspeed_m_s", p.airspeed},
            {"range_m", p.range},
            {"endurance_s", p.endurance},
            {"total_current_A", p.total_current},
            {"alpha_cap_deg", result.safety_alpha_cap},
            {"cell_count", result.cells.size()},
            {"feasible_cells", feasible}};
}

void write_trim_text(std::ostream& out, const TrimPoint& p) {
    std::ostringstream os;
    os << std::fixed;
    auto line = [&](const char* label, double v, int prec, const char* unit) {
        os << "  " << std::left << std::setw(20) << label << std::right << std::setw(14)
           << std::setprecision(prec) << v << "  " << unit << '\n';
    };
    os << (p.regime == Regime::Hover ? "hover trim\n" : "cruise trim\n");
    line("mounting angle", p.gamma, 3, "deg");
    line("attack angle", p.alpha, 3, "deg");
    line("pitch angle", p.theta, 3, "deg");
    line("airspeed", p.airspeed, 3, "m/s");
    line("axial inflow", p.axial_inflow, 3, "m/s");
    line("wing lift", p.lift, 3, "N");
    line("wing drag", p.drag, 3, "N");
    line("thrust per rotor", p.thrust_per_rotor, 4, "N");
    line("rotor speed", p.rpm, 1, "RPM");
    line("torque per rotor", p.torque_per_rotor, 5, "N*m");
    line("current per ESC", p.current_per_esc, 4, "A");
    line("total current", p.total_current, 4, "A");
    line("endurance", p.endurance, 1, "s");
    line("range", p.range, 1, "m");
    out << os.str();
}

std::optional<double> CompareRow::saving_percent() const {
    if (!wing || !wingless) return std::nullopt;
    return 100.0 * (wingless->total_current - wing->total_current) / wingless->total_current;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
    out << "# battery current draw (A and mAh/s), not electrical power\n";
    out << kCompareCsvHeader << '\n';
    auto opt = [](const std::optional<TrimPoint>& p, bool mah) {
        if (!p) return std::string();
        return format_number(mah ? amps_to_mah_per_s(p->total_current) : p->total_current);
    };
    for (const auto& r : rows) {
        const auto s = r.saving_percent();
        out << format_number(r.speed) << ',' << opt(r.wing, false) << ',' << opt(r.wing, true) << ','
            << opt(r.wingless, false) << ',' << opt(r.wingless, true) << ','
            << (s ? format_number(*s) : std::string()) << ',' << r.wing_status << ','
            << r.wingless_status << '\n';
    }
}

void write_compare_text(std::ostream& out, const std::vector<CompareRow>& rows, double gamma_deg) {
    std::ostringstream os;
    os << "Current draw, lifting wing at " << format_number(gamma_deg)
       << " deg vs. wingless airframe (battery current, not electrical power)\n";
    os << std::right << std::setw(8) << "speed" << std::setw(12) << "wing" << std::setw(12) << "wing"
       << std::setw(12) << "wingless" << std::setw(12) << "wingless" << std::setw(10) << "saving" << '\n';
    os << std::setw(8) << "m/s" << std::setw(12) << "A" << std::setw(12) << "mAh/s" << std::setw(12) << "A"
       << std::setw(12) << "mAh/s" << std::setw(10) << "%" << '\n';
    os << std::fixed;
    auto cell = [&](const std::optional<TrimPoint>& p, bool mah) {
        if (p) os << std::setw(12) << std::setprecision(3) << (mah ? amps_to_mah_per_s(p->total_current) : p->total_current);
        else os << std::setw(12) << "-";
    };
    for (const auto& r : rows) {
        os << std::setw(8) << std::setprecision(2) << r.speed;
        cell(r.wing, false);
        cell(r.wing, true);
        cell(r.wingless, false);
        cell(r.wingless, true);
        if (const auto s = r.saving_percent()) os << std::setw(10) << std::setprecision(2) << *s;
        else os << std::setw(10) << "-";
        if (!r.wing) os << "  wing: " << r.wing_status;
        if (!r.wingless) os << "  wingless: " << r.wingless_status;
        os << '\n';
    }
    out << os.str();
}

json compare_to_json(const std::vector<CompareRow>& rows, double gamma_deg) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row = {{"speed_m_s", r.speed}, {"wing_status", r.wing_status}, {"wingless_status", r.wingless_status}};
        if (r.wing) {
            row["wing_current_A"] = r.wing->total_current;
            row["wing_current_mAh_s"] = amps_to_mah_per_s(r.wing->total_current);
        }
        if (r.wingless) {
            row["wingless_current_A"] = r.wingless->total_current;
            row["wingless_current_mAh_s"] = amps_to_mah_per_s(r.wingless->total_current);
        }
        if (const auto s = r.saving_percent()) row["saving_percent"] = *s;
        arr.push_back(row);
    }
    return {{"quantity", "battery current draw, not electrical power"},
            {"mounting_angle_deg", gamma_deg},
            {"rows", arr}};
}

} // namespace liftwing
