#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

// Syntax error in an expression string; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// The smash product of two classes that both carry nontrivial monodromy is
// not defined symbolically.
class UnsupportedSmash : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A one-parameter subgroup pairs to zero against some tangent weight, so the
// fixed point is not isolated under it.
class NonGenericAction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural problem in a model/table loaded from JSON or built in code.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A specialization homomorphism was applied outside its supported subring
// (missing table data, monodromic atom, unit symbol, ...).
class SpecializationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace motivic
