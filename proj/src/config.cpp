#include "liftwing/config.hpp"

#include <fstream>
#include <set>

#include "liftwing/error.hpp"
#include "liftwing/reference_models.hpp"

namespace liftwing {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorKind::ConfigError, what); }

// Walks one JSON object, handing out known keys and rejecting anything left over.
class Section {
public:
    Section(const json& doc, std::string path) : doc_(doc), path_(std::move(path)) {
        if (!doc_.is_object()) config_error(path_ + ": expected an object");
    }
    ~Section() noexcept(false) {
        if (std::uncaught_exceptions() > 0) return;
        for (const auto& [key, _] : doc_.items())
            if (!used_.count(key)) config_error(path_ + ": unknown key '" + key + "'");
    }
    Section(const Section&) = delete;
    Section& operator=(const Section&) = delete;

    const json* get(const std::string& key) {
        used_.insert(key);
        const auto it = doc_.find(key);
        return it == doc_.end() ? nullptr : &*it;
    }

    void number(const std::string& key, double& out) {
        if (const json* v = get(key)) {
            if (!v->is_number()) config_error(path_ + "." + key + ": expected a number");
            out = v->get<double>();
        }
    }
    void integer(const std::string& key, int& out) {
        if (const json* v = get(key)) {
            if (!v->is_number_integer()) config_error(path_ + "." + key + ": expected an integer");
            out = v->get<int>();
        }
    }
    void boolean(const std::string& key, bool& out) {
        if (const json* v = get(key)) {
            if (!v->is_boolean()) config_error(path_ + "." + key + ": expected true/false");
            out = v->get<bool>();
        }
    }
    void string(const std::string& key, std::string& out) {
        if (const json* v = get(key)) {
            if (!v->is_string()) config_error(path_ + "." + key + ": expected a string");
            out = v->get<std::string>();
        }
    }
    void interval(const std::string& key, Interval& out) {
        if (const json* v = get(key)) {
            if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number())
                config_error(path_ + "." + key + ": expected [lo, hi]");
            out = {(*v)[0].get<double>(), (*v)[1].get<double>()};
        }
    }
    const std::string& path() const { return path_; }

private:
    const json& doc_;
    std::string path_;
    std::set<std::string> used_;
};

PolySurrogate read_surrogate(const json& doc, const std::string& path, const PolySurrogate& fallback,
                             std::string& note) {
    Section s(doc, path);
    Interval vp = fallback.vp_domain();
    Interval rpm = fallback.rpm_domain();
    std::string unit(to_string(fallback.output_unit()));
    std::vector<PolyTerm> terms = fallback.terms();
    s.string("note", note);
    s.string("output_unit", unit);
    s.interval("vp_domain_m_s", vp);
    s.interval("rpm_domain_rpm", rpm);
    if (const json* t = s.get("terms")) {
        if (!t->is_array()) config_error(path + ".terms: expected an array");
        terms.clear();
        for (std::size_t i = 0; i < t->size(); ++i) {
            Section term((*t)[i], path + ".terms[" + std::to_string(i) + "]");
            PolyTerm pt;
            term.integer("vp_exp", pt.vp_exp);
            term.integer("rpm_exp", pt.rpm_exp);
            if (!(*t)[i].contains("coefficient")) config_error(term.path() + ": missing coefficient");
            term.number("coefficient", pt.coefficient);
            terms.push_back(pt);
        }
    }
    return PolySurrogate(std::move(terms), vp, rpm, output_unit_from_string(unit));
}

std::string convention_name(EndpointConvention c) {
    return c == EndpointConvention::FromStep ? "from_step" : "from_zero";
}

} // namespace

SweepGrid RunConfig::grid() const {
    const double g0 = endpoint_convention == EndpointConvention::FromStep ? grid_spec.gamma_step : 0.0;
    const double a0 = endpoint_convention == EndpointConvention::FromStep ? grid_spec.alpha_step : 0.0;
    SweepGrid g{g0, grid_spec.gamma_max, grid_spec.gamma_step, a0, grid_spec.alpha_max, grid_spec.alpha_step};
    g.validate();
    return g;
}

RunConfig default_config() {
    return RunConfig{
        ModelBundle{Airframe{}, Environment{}, reference::aero(), reference::thrust_surrogate(),
                    reference::torque_surrogate(), reference::esc(), Battery{}, false},
        GridSpec{},
        EndpointConvention::FromStep,
        "reference thrust fit; 1.652e-3 term read as the Vp coefficient",
        "full cubic refit to data/prop_10x7_synthetic.dat (reference torque listing is inconsistent)",
    };
}

RunConfig config_from_json(const json& doc) {
    RunConfig cfg = default_config();
    Section root(doc, "config");

    if (const json* a = root.get("airframe")) {
        Section s(*a, "airframe");
        Airframe& af = cfg.bundle.airframe;
        s.number("mass_kg", af.mass);
        s.number("reference_area_m2", af.reference_area);
        s.integer("rotor_count", af.rotor_count);
        s.number("prop_diameter_m", af.prop_diameter);
        s.number("rotor_tilt_deg", af.rotor_tilt);
        s.number("stall_alpha_deg", af.stall_alpha);
        s.number("safety_margin_deg", af.safety_margin);
        s.number("mounting_angle_deg", af.mounting_angle);
    }
    if (const json* e = root.get("environment")) {
        Section s(*e, "environment");
        s.number("air_density_kg_m3", cfg.bundle.env.air_density);
        s.number("gravity_m_s2", cfg.bundle.env.gravity);
    }
    if (const json* a = root.get("aero")) {
        Section s(*a, "aero");
        const LinearAeroModel& m = cfg.bundle.aero;
        double ls = m.lift_slope(), li = m.lift_intercept(), ds = m.drag_slope(), di = m.drag_intercept();
        double lo = m.alpha_min(), hi = m.alpha_max();
        s.number("lift_slope_per_deg", ls);
        s.number("lift_intercept", li);
        s.number("drag_slope_per_deg", ds);
        s.number("drag_intercept", di);
        s.number("alpha_min_deg", lo);
        s.number("alpha_max_deg", hi);
        cfg.bundle.aero = LinearAeroModel(ls, li, ds, di, lo, hi);
    }
    if (const json* t = root.get("thrust_surrogate"))
        cfg.bundle.thrust = read_surrogate(*t, "thrust_surrogate", cfg.bundle.thrust, cfg.thrust_note);
    if (const json* t = root.get("torque_surrogate"))
        cfg.bundle.torque = read_surrogate(*t, "torque_surrogate", cfg.bundle.torque, cfg.torque_note);
    if (const json* e = root.get("esc")) {
        Section s(*e, "esc");
        const EscCurrentModel& m = cfg.bundle.esc;
        double q = m.quad(), l = m.lin(), c = m.constant();
        Interval dom = m.torque_domain();
        s.number("quad_A_per_Nm2", q);
        s.number("lin_A_per_Nm", l);
        s.number("const_A", c);
        s.interval("torque_domain_Nm", dom);
        cfg.bundle.esc = EscCurrentModel(q, l, c, dom);
    }
    if (const json* b = root.get("battery")) {
        Section s(*b, "battery");
        s.number("capacity_As", cfg.bundle.battery.capacity);
    }
    if (const json* g = root.get("grid")) {
        Section s(*g, "grid");
        s.number("gamma_max_deg", cfg.grid_spec.gamma_max);
        s.number("alpha_max_deg", cfg.grid_spec.alpha_max);
        s.number("gamma_step_deg", cfg.grid_spec.gamma_step);
        s.number("alpha_step_deg", cfg.grid_spec.alpha_step);
    }
    if (const json* f = root.get("flags")) {
        Section s(*f, "flags");
        s.boolean("apply_tilt_loss", cfg.bundle.apply_tilt_loss);
        s.number("parasite_drag_area_m2", cfg.bundle.airframe.parasite_drag_area);
        std::string conv = convention_name(cfg.endpoint_convention);
        s.string("endpoint_convention", conv);
        if (conv == "from_step") cfg.endpoint_convention = EndpointConvention::FromStep;
        else if (conv == "from_zero") cfg.endpoint_convention = EndpointConvention::FromZero;
        else config_error("flags.endpoint_convention: expected from_step or from_zero");
    }

    cfg.bundle.validate();
    (void)cfg.grid();
    return cfg;
}

json aero_to_json(const LinearAeroModel& m) {
    return {{"lift_slope_per_deg", m.lift_slope()}, {"lift_intercept", m.lift_intercept()},
            {"drag_slope_per_deg", m.drag_slope()}, {"drag_intercept", m.drag_intercept()},
            {"alpha_min_deg", m.alpha_min()},      {"alpha_max_deg", m.alpha_max()}};
}

json surrogate_to_json(const PolySurrogate& s, const std::string& note) {
    json terms = json::array();
    for (const auto& t : s.terms())
        terms.push_back({{"vp_exp", t.vp_exp}, {"rpm_exp", t.rpm_exp}, {"coefficient", t.coefficient}});
    json out = {{"output_unit", std::string(to_string(s.output_unit()))},
                {"vp_domain_m_s", {s.vp_domain().lo, s.vp_domain().hi}},
                {"rpm_domain_rpm", {s.rpm_domain().lo, s.rpm_domain().hi}},
                {"terms", terms}};
    if (!note.empty()) out["note"] = note;
    return out;
}

json esc_to_json(const EscCurrentModel& m) {
    return {{"quad_A_per_Nm2", m.quad()},
            {"lin_A_per_Nm", m.lin()},
            {"const_A", m.constant()},
            {"torque_domain_Nm", {m.torque_domain().lo, m.torque_domain().hi}}};
}

json config_to_json(const RunConfig& cfg) {
    const Airframe& af = cfg.bundle.airframe;
    return {
        {"airframe",
         {{"mass_kg", af.mass},
          {"reference_area_m2", af.reference_area},
          {"rotor_count", af.rotor_count},
          {"prop_diameter_m", af.prop_diameter},
          {"rotor_tilt_deg", af.rotor_tilt},
          {"stall_alpha_deg", af.stall_alpha},
          {"safety_margin_deg", af.safety_margin},
          {"mounting_angle_deg", af.mounting_angle}}},
        {"environment",
         {{"air_density_kg_m3", cfg.bundle.env.air_density}, {"gravity_m_s2", cfg.bundle.env.gravity}}},
        {"aero", aero_to_json(cfg.bundle.aero)},
        {"thrust_surrogate", surrogate_to_json(cfg.bundle.thrust, cfg.thrust_note)},
        {"torque_surrogate", surrogate_to_json(cfg.bundle.torque, cfg.torque_note)},
        {"esc", esc_to_json(cfg.bundle.esc)},
        {"battery", {{"capacity_As", cfg.bundle.battery.capacity}}},
        {"grid",
         {{"gamma_max_deg", cfg.grid_spec.gamma_max},
          {"alpha_max_deg", cfg.grid_spec.alpha_max},
          {"gamma_step_deg", cfg.grid_spec.gamma_step},
          {"alpha_step_deg", cfg.grid_spec.alpha_step}}},
        {"flags",
         {{"apply_tilt_loss", cfg.bundle.apply_tilt_loss},
          {"parasite_drag_area_m2", af.parasite_drag_area},
          {"endpoint_convention", convention_name(cfg.endpoint_convention)}}},
    };
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) config_error("cannot open config '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        config_error("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return config_from_json(doc);
}

void save_config(const RunConfig& config, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path.string() + "'");
    out << config_to_json(config).dump(2) << '\n';
    if (!out) throw Error(ErrorKind::IoError, "write to '" + path.string() + "' failed");
}

} // namespace liftwing
