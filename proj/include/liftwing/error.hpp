#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liftwing {

/// Every failure the model can report. Sweep cells record these as their
/// infeasibility reason, so the names are also the CSV `status` strings.
enum class ErrorKind {
    InvalidModel,
    OutOfAeroDomain,
    OutOfSurrogateDomain,
    OutOfEscDomain,
    HoverDegenerate,
    AeroInfeasible,
    RpmInfeasible,
    NoTrimAtSpeed,
    EmptyFeasibleSet,
    AlphaNotOnGrid,
    DegenerateDesign,
    RankDeficient,
    DegenerateVariance,
    ParseError,
    UnknownUnit,
    ConfigError,
    IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the table parsers; carries the 1-based source line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace liftwing
