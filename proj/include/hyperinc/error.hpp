#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperinc {

enum class ErrorCode {
    EmptyVertexSet,
    EmptyEdge,
    UnknownVertexInEdge,
    DuplicateEdge,
    DuplicateVertex,
    DuplicateEdgeName,
    CycleTooShort,
    UnknownVertex,
    UnknownEdge,
    EmptySubset,
    SupportOutsideSubset,
    IsolatedVertex,
    InstanceTooLarge,
    DimensionMismatch,
    NonIntegerEntries,
    InvalidParameters,
    OverlappingSets,
    SubsetTooSmall,
    SingletonEdgeWithBanerjeeWeight,
    NonPositiveWeight,
    NonSquare,
    GroundSetMismatch,
    PartitionNotFiner,
    ParseError,
    BadWeightFile,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every domain failure in the library is reported through this type; the
/// code is stable and is what the CLI prints in machine-readable reports.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace hyperinc
