#pragma once

#include <stdexcept>
#include <string>

namespace gltau {

// Base class for all library errors. Subclasses map onto the failure
// categories surfaced by the CLI exit codes (config=2, numerical=3,
// resource=4).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// (lambda, tau) outside the admissibility disk |tau - lambda| <= lambda,
// or lambda < 0.
class AdmissibilityError : public Error {
public:
    using Error::Error;
};

// A per-process time scale sigma_l <= 0.
class ScaleError : public Error {
public:
    using Error::Error;
};

// a = b = 0 passed to the (a, b, theta) parametrization.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// Ito-Euler iterate exceeded cond_max, or a stored inverse lost accuracy.
class SingularityError : public Error {
public:
    using Error::Error;
};

// Unknown process/deterministic index in a word evaluation.
class IndexError : public Error {
public:
    using Error::Error;
};

// Deterministic letter reached the generator path.
class UnsupportedLetterError : public Error {
public:
    using Error::Error;
};

// Basis dimension exceeds basis_cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Generator image left E_d; indicates an implementation bug and must abort.
class ClosureError : public Error {
public:
    using Error::Error;
};

// ODE integrator could not reach the requested tolerance.
class ToleranceError : public Error {
public:
    using Error::Error;
};

// Quadrature failed to converge.
class QuadratureError : public Error {
public:
    using Error::Error;
};

// Text input (polynomial, config, matrix file) failed to parse.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line(line),
          column(column) {}
    explicit ParseError(const std::string& msg) : Error(msg), line(0), column(0) {}
    std::size_t line;
    std::size_t column;
};

// Polynomial arity does not match the sample it is evaluated on.
class ArityError : public Error {
public:
    using Error::Error;
};

// Operation preconditions violated (wrong scheme, bad dt, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

}  // namespace gltau
