#ifndef CONDRISK_ERRORS_HPP
#define CONDRISK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace condrisk {

enum class Errc {
    ZeroProbabilityAtom,
    ProbSum,
    DuplicateLabel,
    NotAPartition,
    EmptyBlock,
    SpaceMismatch,
    EmptyFamily,
    NonPositiveEps,
    PartitionNotInF,
    ArityMismatch,
    BadExponent,
    ShapeMismatch,
    BadParameter,
    NonFiniteValue,
    NotSeparable,
    NotAttainable,
    EmptyGenerators,
    LPFailure,
    OptimizerFailure,
    NotConvergent,
    InfMinusInf,
    FileNotFound,
    SchemaError,
};

const char* errc_name(Errc c);

// Domain error. `where` carries the offending block/atom index when one exists
// (NotSeparable names the block, SchemaError carries a JSON pointer in the
// message instead).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, int where = -1)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code), where_(where) {}

    Errc code() const { return code_; }
    int where() const { return where_; }

private:
    Errc code_;
    int where_;
};

} // namespace condrisk

#endif
