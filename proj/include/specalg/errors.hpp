#pragma once

#include <stdexcept>
#include <string>

namespace specalg {

struct AlphabetMismatch : std::runtime_error {
    AlphabetMismatch() : std::runtime_error("alphabet mismatch") {}
};

struct StateBlowup : std::runtime_error {
    explicit StateBlowup(std::size_t cap)
        : std::runtime_error("state blow-up: determinization exceeded " + std::to_string(cap) + " states") {}
};

struct SignatureMismatch : std::runtime_error {
    SignatureMismatch() : std::runtime_error("signature mismatch") {}
};

struct ControlConflict : std::runtime_error {
    ControlConflict() : std::runtime_error("control conflict") {}
};

struct NondeterministicMts : std::runtime_error {
    NondeterministicMts() : std::runtime_error("deterministic MTS required") {}
};

struct EnumerationBound : std::runtime_error {
    EnumerationBound() : std::runtime_error("enumeration bound exceeded") {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace specalg
