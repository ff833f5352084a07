#pragma once

#include <stdexcept>
#include <string>

namespace pexlab {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (AF files, DIMACS, alpha maps, family files, containers).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A documented engine cap was exceeded (n > 64, oracle n > 22, ...).
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

// An ArgSet / AcceptanceVector was used with a system of a different width.
struct WidthMismatch : Error {
    explicit WidthMismatch(const std::string& what) : Error(what) {}
};

// A decision procedure was handed an encoding of the wrong scheme.
struct SchemeMismatch : Error {
    explicit SchemeMismatch(const std::string& what) : Error(what) {}
};

// An untrusted acceptance vector failed validation (broken instance promise).
struct InvalidAlpha : Error {
    explicit InvalidAlpha(const std::string& what) : Error(what) {}
};

// An optional search node budget ran out before the answer was decided.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

}  // namespace pexlab
