#include "hyperinc/error.hpp"

namespace hyperinc {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyVertexSet: return "EmptyVertexSet";
        case ErrorCode::EmptyEdge: return "EmptyEdge";
        case ErrorCode::UnknownVertexInEdge: return "UnknownVertexInEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::DuplicateEdgeName: return "DuplicateEdgeName";
        case ErrorCode::CycleTooShort: return "CycleTooShort";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::SupportOutsideSubset: return "SupportOutsideSubset";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonIntegerEntries: return "NonIntegerEntries";
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::OverlappingSets: return "OverlappingSets";
        case ErrorCode::SubsetTooSmall: return "SubsetTooSmall";
        case ErrorCode::SingletonEdgeWithBanerjeeWeight: return "SingletonEdgeWithBanerjeeWeight";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
        case ErrorCode::PartitionNotFiner: return "PartitionNotFiner";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BadWeightFile: return "BadWeightFile";
    }
    return "Unknown";
}

}  // namespace hyperinc
