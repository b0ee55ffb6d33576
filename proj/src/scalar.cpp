#include "fairsplit/scalar.hpp"

#include "fairsplit/errors.hpp"

#include <algorithm>
#include <ostream>

namespace fairsplit {

namespace {

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

Scalar::Scalar(long num, long den) {
    if (den == 0)
        throw DivisionByZero();
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0)
        throw DivisionByZero();
    q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "' (expected p or p/q)");

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
}

std::string Scalar::str() const {
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Scalar::to_decimal(int places) const {
    places = std::max(places, 0);
    mpz_class scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));

    // |q| * 10^places rounded half away from zero.
    mpz_class num = ::abs(q_.get_num()) * scale * 2 + q_.get_den();
    mpz_class den = q_.get_den() * 2;
    mpz_class rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

    std::string digits = rounded.get_str();
    if (places > 0) {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) - digits.size() + 1, '0');
        digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    }
    if (sign() < 0 && rounded != 0)
        digits.insert(0, "-");
    return digits;
}

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(q_))); }

Scalar Scalar::operator-() const { return Scalar(mpq_class(-q_)); }

Scalar& Scalar::operator+=(const Scalar& o) {
    q_ += o.q_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    q_ -= o.q_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    q_ *= o.q_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero())
        throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace fairsplit
