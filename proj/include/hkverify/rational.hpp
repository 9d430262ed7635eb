#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hkverify {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool cond, const char* what) {
    if (!cond) throw PreconditionError(what);
}

// Canonical rendering: "p/q" with q > 0 and gcd(p,q) = 1, or "p" when q = 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q"; rejects anything else (including q = 0).
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);
Integer to_integer(const Rational& r);  // throws unless is_integer(r)
long long to_int64(const Rational& r);  // throws unless integral and in range

Integer gcd(const Integer& a, const Integer& b);
long long gcd(long long a, long long b);

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols);

// Exact Gauss-Jordan solve of a square nonsingular system; throws PreconditionError when singular.
RationalVector solve_linear(RationalMatrix a, RationalVector b);

Rational determinant(RationalMatrix a);

}  // namespace hkverify
