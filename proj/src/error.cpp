#include "homcode/error.hpp"

namespace homcode {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::OpenEdge: return "OpenEdge";
        case ErrorKind::PinchedVertex: return "PinchedVertex";
        case ErrorKind::RepeatedVertexInFace: return "RepeatedVertexInFace";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::BadFace: return "BadFace";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DegenerateParams: return "DegenerateParams";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::NoSuchCycle: return "NoSuchCycle";
        case ErrorKind::OneSidedCycle: return "OneSidedCycle";
        case ErrorKind::NotACycle: return "NotACycle";
        case ErrorKind::DisconnectedCover: return "DisconnectedCover";
        case ErrorKind::NoNontrivialCycle: return "NoNontrivialCycle";
        case ErrorKind::MethodTooExpensive: return "MethodTooExpensive";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InconsistentCode: return "InconsistentCode";
    }
    return "Unknown";
}

}  // namespace homcode
