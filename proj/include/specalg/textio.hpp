#pragma once

#include <string>
#include <vector>

#include "specalg/theory.hpp"

namespace specalg {

struct NamedSpec {
    std::string name;
    Spec value;
};

struct SpecFile {
    std::vector<NamedSpec> specs;

    const Spec* find(const std::string& name) const;
};

/// Parses the line-oriented spec format. Throws ParseError with the
/// offending line number.
SpecFile parse_spec(const std::string& text);

/// Canonical textual form: declarations sorted, transitions sorted.
std::string render_spec(const Spec& value, const std::string& name);

std::string render_file(const SpecFile& file);

}  // namespace specalg
