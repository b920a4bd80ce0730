#pragma once

#include <stdexcept>
#include <string>

namespace troph {

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero in K") {}
};

// valuation(0) / tropicalize(0)
struct undefined_valuation : std::domain_error {
    undefined_valuation() : std::domain_error("valuation of zero is undefined") {}
};

// residue() of an element of nonzero valuation
struct not_a_unit : std::domain_error {
    explicit not_a_unit(const std::string& what) : std::domain_error(what) {}
};

struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

struct dimension_mismatch : std::invalid_argument {
    explicit dimension_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_input : std::invalid_argument {
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Hilbert-function windows did not stabilize before d_max
struct no_stabilization : std::runtime_error {
    explicit no_stabilization(const std::string& what) : std::runtime_error(what) {}
};

// witness_polynomial called at a member point
struct no_witness : std::runtime_error {
    explicit no_witness(const std::string& what) : std::runtime_error(what) {}
};

struct non_generic_input : std::invalid_argument {
    explicit non_generic_input(const std::string& what) : std::invalid_argument(what) {}
};

struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// a self-check inside an algorithm failed; indicates a bug, not bad input
struct internal_inconsistency : std::logic_error {
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace troph
