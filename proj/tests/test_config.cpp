#include <doctest.h>

#include <filesystem>

#include "liftwing/config.hpp"
#include "liftwing/error.hpp"
#include "liftwing/reference_models.hpp"

using namespace liftwing;
using nlohmann::json;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected liftwing::Error");
    return ErrorKind::InvalidModel;
}

} // namespace

TEST_CASE("default configuration") {
    const RunConfig c = default_config();
    CHECK_NOTHROW(c.bundle.validate());
    CHECK(c.bundle.airframe.mass == 2.0);
    CHECK(c.bundle.airframe.rotor_count == 4);
    CHECK(c.bundle.aero == reference::aero());
    CHECK(c.bundle.thrust == reference::thrust_surrogate());
    CHECK(c.bundle.torque == reference::torque_surrogate());
    CHECK(c.bundle.esc == reference::esc());
    CHECK(!c.bundle.apply_tilt_loss);
    CHECK(c.grid().cell_count() == 900);
}

TEST_CASE("round trip through JSON") {
    RunConfig c = default_config();
    CHECK(config_from_json(config_to_json(c)) == c);

    c.bundle.airframe.reference_area = 0.4137;
    c.bundle.battery.capacity = 12345.678;
    c.bundle.apply_tilt_loss = true;
    c.endpoint_convention = EndpointConvention::FromZero;
    c.grid_spec.alpha_step = 0.5;
    c.thrust_note = "bench run 3";
    const RunConfig back = config_from_json(json::parse(config_to_json(c).dump()));
    CHECK(back == c);
    CHECK(back.grid().cell_count() == 51u * 37u);

    const auto path = std::filesystem::temp_directory_path() / "liftwing_config_roundtrip.json";
    save_config(c, path);
    CHECK(load_config(path) == c);
    std::filesystem::remove(path);
}

TEST_CASE("partial documents keep defaults") {
    const RunConfig c = config_from_json(json::parse(R"({"airframe": {"mass_kg": 2.5}, "battery": {"capacity_As": 7200}})"));
    CHECK(c.bundle.airframe.mass == 2.5);
    CHECK(c.bundle.battery.capacity == 7200.0);
    CHECK(c.bundle.airframe.reference_area == default_config().bundle.airframe.reference_area);
    CHECK(config_from_json(json::object()) == default_config());
}

TEST_CASE("rejected documents") {
    CHECK(kind_of([] { config_from_json(json::parse(R"({"airframe": {"mass": 2}})")); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { config_from_json(json::parse(R"({"wing": {}})")); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { config_from_json(json::parse(R"({"airframe": {"mass_kg": "heavy"}})")); }) == ErrorKind::ConfigError);
    CHECK(kind_of([] { config_from_json(json::parse(R"({"airframe": {"mass_kg": -1}})")); }) == ErrorKind::InvalidModel);
    CHECK(kind_of([] { config_from_json(json::parse(R"({"battery": {"capacity_As": 0}})")); }) == ErrorKind::InvalidModel);
    CHECK(kind_of([] { config_from_json(json::parse(R"({"flags": {"endpoint_convention": "both"}})")); }) ==
          ErrorKind::ConfigError);
    CHECK(kind_of([] {
              config_from_json(json::parse(
                  R"({"thrust_surrogate": {"terms": [{"vp_exp": 0, "rpm_exp": 0, "coefficient": 1}, {"vp_exp": 0, "rpm_exp": 0, "coefficient": 2}]}})"));
          }) == ErrorKind::InvalidModel);
    CHECK(kind_of([] { load_config("/nonexistent/liftwing.json"); }) == ErrorKind::ConfigError);
}
