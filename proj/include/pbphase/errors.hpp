#ifndef PBPHASE_ERRORS_HPP
#define PBPHASE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbphase {

/// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A factor handed to the log-space product was negative or NaN.
class NonPositiveFactor : public Error
{
public:
    NonPositiveFactor(std::size_t index, double value);

    std::size_t index() const noexcept { return index_; }
    double value() const noexcept { return value_; }

private:
    std::size_t index_;
    double value_;
};

/// A state parameterization violates one of its family's inequalities.
class ConstraintViolated : public Error
{
public:
    ConstraintViolated(std::string constraint, double offending_value);

    const std::string& constraint() const noexcept { return constraint_; }
    double offending_value() const noexcept { return value_; }

private:
    std::string constraint_;
    double value_;
};

/// A factor that must be strictly positive fell below the representable envelope.
class NumericalUnderflow : public Error
{
public:
    using Error::Error;
};

class DomainError : public Error
{
public:
    using Error::Error;
};

class GridTooCoarse : public Error
{
public:
    explicit GridTooCoarse(int grid_points);
};

class IndexOutOfWindow : public Error
{
public:
    using Error::Error;
};

} // namespace pbphase

#endif // PBPHASE_ERRORS_HPP
