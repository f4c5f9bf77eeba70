#include "impalg/errors.hpp"

namespace impalg {

const char* errc_name(errc code) {
    switch (code) {
        case errc::isolated_vertex: return "IsolatedVertex";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::empty_edge: return "EmptyEdge";
        case errc::unknown_label: return "UnknownLabel";
        case errc::duplicate_label: return "DuplicateLabel";
        case errc::ground_too_large: return "GroundTooLarge";
        case errc::empty_index_set: return "EmptyIndexSet";
        case errc::bad_index_set: return "BadIndexSet";
        case errc::bounds_too_large: return "BoundsTooLarge";
        case errc::empty_algebra: return "EmptyAlgebra";
        case errc::not_an_element: return "NotAnElement";
        case errc::too_many_minimal_elements: return "TooManyMinimalElements";
        case errc::negative_value: return "NegativeValue";
        case errc::negative_result: return "NegativeResult";
        case errc::too_many_edges: return "TooManyEdges";
        case errc::empty_value_nonzero: return "EmptyValueNonzero";
        case errc::too_large: return "TooLarge";
        case errc::conditions_fail: return "ConditionsFail";
        case errc::inside_overflow: return "InsideOverflow";
        case errc::verification_fail: return "VerificationFail";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace impalg
