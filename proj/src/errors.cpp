#include "pbphase/errors.hpp"

#include <charconv>

namespace pbphase {

namespace {

std::string shortest(double value)
{
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

} // namespace

NonPositiveFactor::NonPositiveFactor(std::size_t index, double value)
    : Error("non-positive factor " + shortest(value) + " at index " + std::to_string(index)),
      index_(index), value_(value)
{
}

ConstraintViolated::ConstraintViolated(std::string constraint, double offending_value)
    : Error("constraint violated: " + constraint + " (offending value " + shortest(offending_value) + ")"),
      constraint_(std::move(constraint)), value_(offending_value)
{
}

GridTooCoarse::GridTooCoarse(int grid_points)
    : Error("phase grid too coarse: " + std::to_string(grid_points) + " points, need at least 16")
{
}

} // namespace pbphase
