#include "liftwing/error.hpp"

namespace liftwing {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidModel: return "invalid-model";
    case ErrorKind::OutOfAeroDomain: return "aero-domain";
    case ErrorKind::OutOfSurrogateDomain: return "surrogate-domain";
    case ErrorKind::OutOfEscDomain: return "esc-domain";
    case ErrorKind::HoverDegenerate: return "hover-degenerate";
    case ErrorKind::AeroInfeasible: return "aero-infeasible";
    case ErrorKind::RpmInfeasible: return "rpm-infeasible";
    case ErrorKind::NoTrimAtSpeed: return "no-trim-at-speed";
    case ErrorKind::EmptyFeasibleSet: return "empty-feasible-set";
    case ErrorKind::AlphaNotOnGrid: return "alpha-not-on-grid";
    case ErrorKind::DegenerateDesign: return "degenerate-design";
    case ErrorKind::RankDeficient: return "rank-deficient";
    case ErrorKind::DegenerateVariance: return "degenerate-variance";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::UnknownUnit: return "unknown-unit";
    case ErrorKind::ConfigError: return "config-error";
    case ErrorKind::IoError: return "io-error";
    }
    return "unknown";
}

} // namespace liftwing
