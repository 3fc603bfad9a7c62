#pragma once

#include <stdexcept>
#include <string>

namespace fqm {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (bad fractions, dimension mismatch, ...).
struct invalid_input : error {
    explicit invalid_input(const std::string& what) : error(what) {}
};

// The quadratic module has a nontrivial radical where a nondegenerate one is required.
struct degenerate_module : error {
    explicit degenerate_module(const std::string& what) : error(what) {}
};

// An odd lattice was passed where an even one is required.
struct odd_lattice : error {
    explicit odd_lattice(const std::string& what) : error(what) {}
};

// An enumeration or search exceeded its configured budget.
struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& what) : error(what) {}
};

}  // namespace fqm
