#pragma once

#include <stdexcept>
#include <string>

namespace cosmo {

// Malformed input text (graph files, family parameters).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration limit was exceeded.
struct size_error : std::runtime_error {
    explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// An invariant the construction guarantees failed to hold; signals a bug,
// not bad user input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cosmo
