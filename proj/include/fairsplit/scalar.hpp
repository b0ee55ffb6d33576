#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fairsplit {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Every length, offset and area in the library is a Scalar. Floating point
/// only shows up at the edges (Monte Carlo estimates, SVG coordinates) via
/// to_double() / to_decimal().
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : q_(value) {} // NOLINT(google-explicit-constructor)
    Scalar(long num, long den);
    explicit Scalar(mpq_class q);

    /// Accepts "p" or "p/q" with an optional leading sign. Decimals, empty
    /// strings, stray whitespace and zero denominators are rejected.
    static Scalar parse(std::string_view text);

    /// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const;

    /// Decimal rendering rounded half away from zero to `places` digits.
    std::string to_decimal(int places) const;

    double to_double() const { return q_.get_d(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    Scalar abs() const;

    std::string numerator() const { return q_.get_num().get_str(); }
    std::string denominator() const { return q_.get_den().get_str(); }

    const mpq_class& raw() const { return q_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

private:
    mpq_class q_;
};

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace fairsplit
