#pragma once

#include <stdexcept>
#include <string>

namespace thickness {

// Error taxonomy shared by all modules. Each failure mode named by the
// contract it violates, so callers (and the CLI exit-code mapping) can
// distinguish bad input from verification failure.
enum class Errc {
    invalid_parameters,
    degenerate_input,
    no_reflex_angle,
    not_convex_position,
    wrong_arity,
    invalid_drawing,
    invalid_layering,
    precondition_violation,
    lemma_violation,
    too_large,
    search_exhausted,
    bound_too_large,
    parse_error,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace thickness
