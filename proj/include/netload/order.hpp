#pragma once

#include <string>

namespace netload {

// Exact rational with small terms. Every exponent appearing in the closed-form
// tables is representable with denominator 1 or 2; parameter-dependent cells
// stay exact because user exponents are snapped to rationals on entry.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {} // NOLINT: implicit by design
    Rational(long long n, long long d);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const; // "2", "3/2", "-1/2"

    Rational operator-() const { return Rational(-num, den); }
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Best rational approximation by continued fractions. Exponents like 0.5 or
// 1.25 convert exactly; anything without a small denominator is snapped to
// the closest one with den <= max_den.
Rational rational_from_double(double x, long long max_den = 4096);

enum class BoundKind { Theta, Omega };

// Symbolic order n^a * (ln n)^b with exact rational a, b. Constants are out
// of scope; comparisons and products act on the exponents only.
struct AsymptoticOrder {
    Rational n_exp;
    Rational log_exp;
    BoundKind bound = BoundKind::Theta;

    bool same_growth(const AsymptoticOrder& o) const {
        return n_exp == o.n_exp && log_exp == o.log_exp;
    }
    friend AsymptoticOrder operator*(const AsymptoticOrder& a, const AsymptoticOrder& b);
};

// Numeric value n^a * (ln n)^b, natural log. Requires n >= 3 so ln n > 1 and
// negative log powers stay monotone.
double order_eval(const AsymptoticOrder& o, int n);

// Canonical form, e.g. "Omega(n^{3/2} * log(n)^{-1/2})", "Theta(n * log(n))".
std::string to_string(const AsymptoticOrder& o);

} // namespace netload
