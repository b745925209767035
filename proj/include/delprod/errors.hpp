#ifndef DELPROD_ERRORS_HPP
#define DELPROD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace delprod {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed facet-list or coefficient-spec input.
class ParseError : public Error
{
  public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Thrown when d_{i} * d_{i+1} != 0 or a map fails to commute with boundaries.
class ChainConditionError : public Error
{
  public:
    ChainConditionError(int dimension, const std::string& what)
        : Error(what + " (dimension " + std::to_string(dimension) + ")"), dimension_(dimension)
    {
    }

    int dimension() const noexcept { return dimension_; }

  private:
    int dimension_;
};

/// A computation ran past its wall-clock deadline.
class BudgetExceeded : public Error
{
  public:
    using Error::Error;
};

} // namespace delprod

#endif
