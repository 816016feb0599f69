#include "bchkit/errors.hpp"

namespace bchkit {

namespace {

std::string index_message(int a, int b, int c, int dim)
{
    return "structure constant index (" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ") outside 0.." + std::to_string(dim - 1);
}

} // namespace

IndexOutOfRange::IndexOutOfRange(int a_, int b_, int c_, int dim_)
    : ValidationError(index_message(a_, b_, c_, dim_)), a(a_), b(b_), c(c_), dim(dim_)
{
}

AntisymmetryViolation::AntisymmetryViolation(int a_, int b_, int c_)
    : ValidationError("f_" + std::to_string(a_) + std::to_string(b_) + "^" + std::to_string(c_) +
                      " and f_" + std::to_string(b_) + std::to_string(a_) + "^" + std::to_string(c_) +
                      " are not negatives of each other"),
      a(a_), b(b_), c(c_)
{
}

JacobiViolation::JacobiViolation(int a_, int b_, int c_, int e_, std::string residual_)
    : ValidationError("Jacobi identity fails for (a,b,c)=(" + std::to_string(a_) + "," + std::to_string(b_) +
                      "," + std::to_string(c_) + ") in component " + std::to_string(e_) + ": residual " +
                      residual_),
      a(a_), b(b_), c(c_), e(e_), residual(std::move(residual_))
{
}

DimensionMismatch::DimensionMismatch(long expected, long actual)
    : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(actual))
{
}

NonConvergence::NonConvergence(const std::string& what, double achieved_bound_)
    : Error(what), achieved_bound(achieved_bound_)
{
}

ExpansionResidualTooLarge::ExpansionResidualTooLarge(double residual_)
    : Error("matrix logarithm does not lie in the span of the representation (residual " +
            std::to_string(residual_) + ")"),
      residual(residual_)
{
}

} // namespace bchkit
