#pragma once

#include <stdexcept>
#include <string>

namespace homcode {

enum class ErrorKind {
    OpenEdge,
    PinchedVertex,
    RepeatedVertexInFace,
    Disconnected,
    BadFace,
    DimensionMismatch,
    DegenerateParams,
    UnknownName,
    NoSuchCycle,
    OneSidedCycle,
    NotACycle,
    DisconnectedCover,
    NoNontrivialCycle,
    MethodTooExpensive,
    Parse,
    InvalidArgument,
    InconsistentCode,
};

const char* to_string(ErrorKind kind);

/// Every domain failure in the library is reported through this type; `kind()`
/// lets callers (and the CLI's exit-code mapping) dispatch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace homcode
