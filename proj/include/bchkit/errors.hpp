#ifndef BCHKIT_ERRORS_HPP
#define BCHKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bchkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text or file contents.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input parsed but does not define a Lie algebra (or a representation of one).
class ValidationError : public Error {
public:
    using Error::Error;
    virtual std::string kind() const = 0;
};

class IndexOutOfRange : public ValidationError {
public:
    IndexOutOfRange(int a, int b, int c, int dim);
    std::string kind() const override { return "IndexOutOfRange"; }
    int a, b, c, dim;
};

class AntisymmetryViolation : public ValidationError {
public:
    AntisymmetryViolation(int a, int b, int c);
    std::string kind() const override { return "AntisymmetryViolation"; }
    int a, b, c;
};

class JacobiViolation : public ValidationError {
public:
    JacobiViolation(int a, int b, int c, int e, std::string residual);
    std::string kind() const override { return "JacobiViolation"; }
    int a, b, c, e;
    std::string residual;
};

class RepresentationError : public ValidationError {
public:
    using ValidationError::ValidationError;
    std::string kind() const override { return "RepresentationError"; }
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(long expected, long actual);
};

class ClassificationMismatch : public Error {
public:
    using Error::Error;
};

class NoClosedForm : public Error {
public:
    using Error::Error;
};

class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, double achieved_bound);
    double achieved_bound;
};

class Overflow : public Error {
public:
    using Error::Error;
};

class LogDomainError : public Error {
public:
    using Error::Error;
};

class ExpansionResidualTooLarge : public Error {
public:
    explicit ExpansionResidualTooLarge(double residual);
    double residual;
};

} // namespace bchkit

#endif
