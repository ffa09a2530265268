#ifndef SKEWDD_COMMON_HPP
#define SKEWDD_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace skewdd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool fits_int64(const Integer& x) {
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

/// Malformed text input; `position` is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A request exceeded the configured (n, degree) limits.
class ResourceLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace skewdd

#endif // SKEWDD_COMMON_HPP
