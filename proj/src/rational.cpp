#include "hkverify/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <utility>

namespace hkverify {

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const Integer& z) { return z.str(); }

namespace {

Integer parse_integer(std::string_view text, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw PreconditionError("malformed rational: empty integer part");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw PreconditionError("malformed rational: unexpected character");
    std::string digits(text.substr(i));
    Integer value(digits);
    return (text[0] == '-') ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
    Integer num = parse_integer(text.substr(0, slash), true);
    Integer den = parse_integer(text.substr(slash + 1), false);
    if (den == 0) throw PreconditionError("malformed rational: zero denominator");
    return Rational(num, den);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer to_integer(const Rational& r) {
    require(is_integer(r), "value is not an integer");
    return numerator(r);
}

long long to_int64(const Rational& r) {
    Integer z = to_integer(r);
    require(z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max(),
            "integer out of 64-bit range");
    return z.convert_to<long long>();
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

long long gcd(long long a, long long b) { return std::gcd(a, b); }

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols) {
    return RationalMatrix(rows, RationalVector(cols, Rational(0)));
}

RationalVector solve_linear(RationalMatrix a, RationalVector b) {
    const std::size_t n = a.size();
    require(b.size() == n, "solve_linear: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        require(pivot < n, "solve_linear: singular system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = 1 / a[col][col];
        for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    return b;
}

Rational determinant(RationalMatrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            const Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
        }
    }
    return det;
}

}  // namespace hkverify
