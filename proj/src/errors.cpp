#include "thickness/errors.hpp"

namespace thickness {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_parameters: return "invalid-parameters";
        case Errc::degenerate_input: return "degenerate-input";
        case Errc::no_reflex_angle: return "no-reflex-angle";
        case Errc::not_convex_position: return "not-convex-position";
        case Errc::wrong_arity: return "wrong-arity";
        case Errc::invalid_drawing: return "invalid-drawing";
        case Errc::invalid_layering: return "invalid-layering";
        case Errc::precondition_violation: return "precondition-violation";
        case Errc::lemma_violation: return "lemma-violation";
        case Errc::too_large: return "too-large";
        case Errc::search_exhausted: return "search-exhausted";
        case Errc::bound_too_large: return "bound-too-large";
        case Errc::parse_error: return "parse-error";
        case Errc::io_error: return "io-error";
    }
    return "unknown-error";
}

} // namespace thickness
