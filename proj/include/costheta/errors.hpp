#pragma once

#include <stdexcept>
#include <string>

namespace costheta {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid or out-of-domain input (maps to CLI exit code 2).
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

struct domain_error : input_error {
    explicit domain_error(const std::string& what) : input_error(what) {}
};

struct degenerate_input : input_error {
    explicit degenerate_input(const std::string& what) : input_error(what) {}
};

struct division_by_zero : input_error {
    division_by_zero() : input_error("division by zero") {}
};

struct dependent_basis : input_error {
    dependent_basis() : input_error("lattice basis is linearly dependent") {}
};

struct missing_symbol : input_error {
    explicit missing_symbol(const std::string& sym)
        : input_error("valuation missing symbol: " + sym) {}
};

struct not_multiplication_matrix : input_error {
    not_multiplication_matrix()
        : input_error("matrix is not a multiplication matrix for the given field") {}
};

// A numeric refinement loop hit the configured precision cap.  This is a
// hard failure, never a wrong answer (maps to CLI exit code 3).
struct precision_cap_exceeded : error {
    explicit precision_cap_exceeded(const std::string& where)
        : error("precision cap exceeded in " + where) {}
};

// Interval inputs too wide for the requested operation.
struct insufficient_precision : input_error {
    explicit insufficient_precision(const std::string& what) : input_error(what) {}
};

}  // namespace costheta
