#include "liftwing/fitting.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "liftwing/error.hpp"

namespace liftwing {

namespace {

struct UnitInfo {
    std::string_view canonical;
    double factor; // SI = value * factor
};

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

UnitInfo lookup_unit(std::string_view unit) {
    static const std::map<std::string, UnitInfo, std::less<>> table = {
        {"m/s", {"m/s", 1.0}},
        {"mph", {"m/s", 0.44704}},
        {"km/h", {"m/s", 1.0 / 3.6}},
        {"n", {"N", 1.0}},
        {"lbf", {"N", 4.4482216}},
        {"n*m", {"N*m", 1.0}},
        {"n-m", {"N*m", 1.0}},
        {"n.m", {"N*m", 1.0}},
        {"nm", {"N*m", 1.0}},
        {"in-lbf", {"N*m", 0.1129848}},
        {"in*lbf", {"N*m", 0.1129848}},
        {"in.lbf", {"N*m", 0.1129848}},
        {"rpm", {"RPM", 1.0}},
        {"deg", {"deg", 1.0}},
        {"rad", {"deg", 180.0 / std::numbers::pi}},
        {"a", {"A", 1.0}},
        {"-", {"-", 1.0}},
    };
    const auto it = table.find(lower(unit));
    if (it == table.end()) throw Error(ErrorKind::UnknownUnit, "unknown unit '" + std::string(unit) + "'");
    return it->second;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;) out.push_back(tok);
    return out;
}

std::optional<double> parse_number(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::string strip_parens(std::string tok) {
    if (tok.size() >= 2 && tok.front() == '(' && tok.back() == ')') return tok.substr(1, tok.size() - 2);
    return tok;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

FitReport make_report(std::vector<double> coefficients, const std::vector<double>& predicted,
                      const std::vector<double>& observed) {
    FitReport r;
    r.coefficients = std::move(coefficients);
    r.sample_count = observed.size();
    r.r_squared = r_squared(predicted, observed);
    try {
        r.pearson_r = pearson_r(predicted, observed);
    } catch (const Error&) {
        r.pearson_r = std::numeric_limits<double>::quiet_NaN(); // constant prediction
    }
    for (std::size_t i = 0; i < observed.size(); ++i)
        r.max_abs_residual = std::max(r.max_abs_residual, std::abs(observed[i] - predicted[i]));
    return r;
}

std::vector<double> predict(const std::vector<std::vector<double>>& design, const std::vector<double>& c) {
    std::vector<double> out(design.size(), 0.0);
    for (std::size_t i = 0; i < design.size(); ++i)
        for (std::size_t k = 0; k < c.size(); ++k) out[i] += design[i][k] * c[k];
    return out;
}

std::size_t distinct_count(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

double ipow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

std::string canonical_unit(std::string_view unit) { return std::string(lookup_unit(unit).canonical); }

double to_si(double value, std::string_view unit) { return value * lookup_unit(unit).factor; }

double from_si(double value, std::string_view unit) { return value / lookup_unit(unit).factor; }

SampleTable::SampleTable(std::vector<Column> columns) : columns_(std::move(columns)) {
    for (const auto& c : columns_)
        if (c.unit.empty()) throw Error(ErrorKind::UnknownUnit, "column '" + c.name + "' has no unit");
}

void SampleTable::add_row(std::vector<double> values) {
    if (values.size() != columns_.size())
        throw Error(ErrorKind::InvalidModel, "row width does not match the column count");
    rows_.push_back(std::move(values));
}

std::size_t SampleTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i].name == name) return i;
    throw Error(ErrorKind::InvalidModel, "table has no column '" + std::string(name) + "'");
}

std::vector<double> SampleTable::column(std::string_view name) const {
    const std::size_t k = column_index(name);
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r[k]);
    return out;
}

SampleTable parse_propeller_table(std::istream& in, const PropColumnMap& map, const UnitMap& unit_overrides) {
    SampleTable table({{"vp", "m/s"}, {"rpm", "RPM"}, {"thrust", "N"}, {"torque", "N*m"}});

    std::vector<std::string> header;
    std::vector<std::string> units; // parallel to header, may be empty
    struct Pick {
        std::size_t index;
        double factor;
    };
    std::optional<Pick> vp, thrust, torque, rpm_col;
    std::optional<double> block_rpm;
    bool awaiting_units = false;

    auto find_col = [&](const std::string& name, std::size_t line) -> std::size_t {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw ParseError(line, "header lacks column '" + name + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    auto resolve = [&](const std::string& name, std::string_view expected, std::size_t line) -> Pick {
        const std::size_t idx = find_col(name, line);
        std::string unit;
        if (auto o = unit_overrides.find(name); o != unit_overrides.end()) unit = o->second;
        else if (idx < units.size()) unit = units[idx];
        if (unit.empty()) throw Error(ErrorKind::UnknownUnit, "no unit known for column '" + name + "'");
        const UnitInfo info = lookup_unit(unit);
        if (info.canonical != expected)
            throw Error(ErrorKind::UnknownUnit, "column '" + name + "' has unit '" + unit +
                                                    "', expected a " + std::string(expected) + " unit");
        return {idx, info.factor};
    };
    auto bind_columns = [&](std::size_t line) {
        vp = resolve(map.vp, "m/s", line);
        thrust = resolve(map.thrust, "N", line);
        torque = resolve(map.torque, "N*m", line);
        if (!map.rpm.empty()) rpm_col = resolve(map.rpm, "RPM", line);
    };

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.find_first_not_of("=-_ ") == std::string::npos) continue; // rule lines

        const std::string low = lower(line);
        if (low.find("prop rpm") != std::string::npos) {
            const auto eq = line.find('=');
            const auto value = eq == std::string::npos ? std::nullopt : parse_number(trim(line.substr(eq + 1)));
            if (!value) throw ParseError(lineno, "malformed RPM block header");
            block_rpm = *value;
            continue;
        }

        std::vector<std::string> tokens = split_ws(line);
        if (awaiting_units) {
            awaiting_units = false;
            if (tokens.front().front() == '(') {
                units.clear();
                for (auto& t : tokens) units.push_back(strip_parens(t));
                if (units.size() != header.size()) throw ParseError(lineno, "units line does not match header");
                bind_columns(lineno);
                continue;
            }
            bind_columns(lineno);
        }

        const bool numeric_lead = parse_number(tokens.front()).has_value();
        if (!numeric_lead) {
            const bool is_header = std::find(tokens.begin(), tokens.end(), map.vp) != tokens.end() &&
                                   std::find(tokens.begin(), tokens.end(), map.thrust) != tokens.end();
            if (is_header) {
                header = tokens;
                units.clear();
                awaiting_units = true;
                continue;
            }
            if (header.empty()) continue; // title/preamble text
            throw ParseError(lineno, "unexpected text '" + tokens.front() + "'");
        }

        if (header.empty()) throw ParseError(lineno, "data row before a column header");
        if (tokens.size() != header.size())
            throw ParseError(lineno, "expected " + std::to_string(header.size()) + " fields, found " +
                                         std::to_string(tokens.size()));
        auto cell = [&](const Pick& p) {
            const auto v = parse_number(tokens[p.index]);
            if (!v) throw ParseError(lineno, "malformed number '" + tokens[p.index] + "'");
            return *v * p.factor;
        };
        double rpm_value;
        if (rpm_col) {
            rpm_value = cell(*rpm_col);
        } else {
            if (!block_rpm) throw ParseError(lineno, "data row outside an RPM block");
            rpm_value = *block_rpm;
        }
        table.add_row({cell(*vp), rpm_value, cell(*thrust), cell(*torque)});
    }
    if (awaiting_units) bind_columns(lineno);
    return table;
}

SampleTable parse_csv_table(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    std::vector<Column> columns;
    std::vector<double> factors;
    while (columns.empty() && std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::istringstream is(line);
        for (std::string cell; std::getline(is, cell, ',');) {
            cell = trim(cell);
            const auto colon = cell.find(':');
            if (colon == std::string::npos) throw ParseError(lineno, "header cell '" + cell + "' lacks a unit");
            const std::string unit = trim(cell.substr(colon + 1));
            const UnitInfo info = lookup_unit(unit);
            columns.push_back({trim(cell.substr(0, colon)), std::string(info.canonical)});
            factors.push_back(info.factor);
        }
    }
    SampleTable table(columns);
    if (columns.empty()) return table;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::istringstream is(line);
        std::vector<double> values;
        for (std::string cell; std::getline(is, cell, ',');) {
            if (values.size() == factors.size())
                throw ParseError(lineno, "more fields than header columns");
            const auto v = parse_number(trim(cell));
            if (!v) throw ParseError(lineno, "malformed number '" + trim(cell) + "'");
            values.push_back(*v * factors[values.size()]);
        }
        if (values.size() != columns.size())
            throw ParseError(lineno, "expected " + std::to_string(columns.size()) + " fields");
        table.add_row(std::move(values));
    }
    return table;
}

std::vector<double> least_squares(const std::vector<std::vector<double>>& design,
                                  const std::vector<double>& observed) {
    const auto n = static_cast<Eigen::Index>(design.size());
    const auto p = static_cast<Eigen::Index>(design.empty() ? 0 : design.front().size());
    if (p == 0 || n < p || static_cast<Eigen::Index>(observed.size()) != n)
        throw Error(ErrorKind::RankDeficient, "need at least as many samples as coefficients");

    Eigen::MatrixXd x(n, p);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < p; ++k) x(i, k) = design[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
    const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(observed.data(), n);

    // Monomials in RPM span ~12 orders of magnitude; equilibrate columns first.
    Eigen::VectorXd scale = x.colwise().norm().transpose();
    for (Eigen::Index k = 0; k < p; ++k)
        if (scale(k) == 0.0) throw Error(ErrorKind::RankDeficient, "design column is identically zero");
    const Eigen::MatrixXd xs = x * scale.cwiseInverse().asDiagonal();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xs);
    qr.setThreshold(1e-12);
    if (qr.rank() < p) throw Error(ErrorKind::RankDeficient, "design matrix is rank deficient");
    const Eigen::VectorXd c = qr.solve(y).cwiseQuotient(scale);
    return {c.data(), c.data() + c.size()};
}

double r_squared(const std::vector<double>& predicted, const std::vector<double>& observed) {
    if (predicted.size() != observed.size() || observed.empty())
        throw Error(ErrorKind::InvalidModel, "r_squared needs equal, non-empty inputs");
    const double mean = std::accumulate(observed.begin(), observed.end(), 0.0) / observed.size();
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        ss_res += (observed[i] - predicted[i]) * (observed[i] - predicted[i]);
        ss_tot += (observed[i] - mean) * (observed[i] - mean);
    }
    if (ss_tot == 0.0) throw Error(ErrorKind::DegenerateVariance, "observed values are all equal");
    return 1.0 - ss_res / ss_tot;
}

double pearson_r(const std::vector<double>& predicted, const std::vector<double>& observed) {
    if (predicted.size() != observed.size() || observed.empty())
        throw Error(ErrorKind::InvalidModel, "pearson_r needs equal, non-empty inputs");
    const double n = static_cast<double>(observed.size());
    const double mp = std::accumulate(predicted.begin(), predicted.end(), 0.0) / n;
    const double mo = std::accumulate(observed.begin(), observed.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        sxy += (predicted[i] - mp) * (observed[i] - mo);
        sxx += (predicted[i] - mp) * (predicted[i] - mp);
        syy += (observed[i] - mo) * (observed[i] - mo);
    }
    if (sxx == 0.0 || syy == 0.0) throw Error(ErrorKind::DegenerateVariance, "constant series has no correlation");
    return sxy / std::sqrt(sxx * syy);
}

AeroFit fit_linear_aero(const SampleTable& samples) {
    const auto alpha = samples.column("alpha");
    if (distinct_count(alpha) < 2)
        throw Error(ErrorKind::DegenerateDesign, "aero fit needs at least two distinct attack angles");
    std::vector<std::vector<double>> x;
    x.reserve(alpha.size());
    for (double a : alpha) x.push_back({a, 1.0});

    const auto cl = samples.column("cl");
    const auto cd = samples.column("cd");
    auto lift = least_squares(x, cl);
    auto drag = least_squares(x, cd);
    const auto [lo, hi] = std::minmax_element(alpha.begin(), alpha.end());
    LinearAeroModel model(lift[0], lift[1], drag[0], drag[1], *lo, *hi);
    const auto pl = predict(x, lift);
    const auto pd = predict(x, drag);
    return {model, make_report(std::move(lift), pl, cl), make_report(std::move(drag), pd, cd)};
}

SurrogateFit fit_poly_surrogate(const SampleTable& samples, const Basis& basis, std::string_view target) {
    if (basis.empty()) throw Error(ErrorKind::RankDeficient, "empty basis");
    const auto vp = samples.column("vp");
    const auto rpm = samples.column("rpm");
    const auto y = samples.column(target);
    const std::string unit = samples.columns()[samples.column_index(target)].unit;

    std::set<std::pair<int, int>> seen;
    for (const auto& b : basis) {
        if (b.first < 0 || b.second < 0 || !seen.insert(b).second)
            throw Error(ErrorKind::InvalidModel, "basis exponents must be unique and non-negative");
    }
    std::vector<std::vector<double>> x(vp.size());
    for (std::size_t i = 0; i < vp.size(); ++i)
        for (const auto& [ev, en] : basis) x[i].push_back(ipow(vp[i], ev) * ipow(rpm[i], en));

    auto c = least_squares(x, y);
    std::vector<PolyTerm> terms;
    for (std::size_t k = 0; k < basis.size(); ++k) terms.push_back({basis[k].first, basis[k].second, c[k]});
    const auto [vlo, vhi] = std::minmax_element(vp.begin(), vp.end());
    const auto [nlo, nhi] = std::minmax_element(rpm.begin(), rpm.end());
    PolySurrogate s(std::move(terms), {*vlo, *vhi}, {*nlo, *nhi}, output_unit_from_string(unit));
    const auto pred = predict(x, c);
    return {std::move(s), make_report(std::move(c), pred, y)};
}

EscFit fit_esc_quadratic(const SampleTable& samples) {
    const auto m = samples.column("torque");
    const auto current = samples.column("current");
    if (distinct_count(m) < 3)
        throw Error(ErrorKind::DegenerateDesign, "quadratic ESC fit needs three distinct torques");
    std::vector<std::vector<double>> x;
    x.reserve(m.size());
    for (double v : m) x.push_back({v * v, v, 1.0});
    auto c = least_squares(x, current);
    const auto [lo, hi] = std::minmax_element(m.begin(), m.end());
    EscCurrentModel model(c[0], c[1], c[2], {*lo, *hi});
    const auto pred = predict(x, c);
    return {model, make_report(std::move(c), pred, current)};
}

} // namespace liftwing
