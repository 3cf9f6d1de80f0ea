#include "condrisk/errors.hpp"

namespace condrisk {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::ZeroProbabilityAtom: return "ZeroProbabilityAtom";
    case Errc::ProbSum: return "ProbSum";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::EmptyBlock: return "EmptyBlock";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::NonPositiveEps: return "NonPositiveEps";
    case Errc::PartitionNotInF: return "PartitionNotInF";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::BadExponent: return "BadExponent";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BadParameter: return "BadParameter";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::NotAttainable: return "NotAttainable";
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::LPFailure: return "LPFailure";
    case Errc::OptimizerFailure: return "OptimizerFailure";
    case Errc::NotConvergent: return "NotConvergent";
    case Errc::InfMinusInf: return "InfMinusInf";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::SchemaError: return "SchemaError";
    }
    return "UnknownError";
}

} // namespace condrisk
