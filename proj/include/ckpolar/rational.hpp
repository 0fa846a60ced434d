#ifndef CKPOLAR_RATIONAL_HPP
#define CKPOLAR_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ckpolar/errors.hpp"

namespace ckpolar {

// Canonical (gcd-reduced, positive denominator) arbitrary-precision rational.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// p/q in lowest terms. mpq_class(p, q) does not reduce.
inline Rational ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q" with decimal integers. Throws ParseError.
inline Rational parse_rational(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is one.
inline std::string format_rational(const Rational& r) { return r.get_str(10); }

inline bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Exact square root of a non-negative rational, if it is rational.
inline bool rational_sqrt(const Rational& value, Rational& root) {
    if (value < 0) return false;
    const mpz_class& p = value.get_num();
    const mpz_class& q = value.get_den();
    if (mpz_perfect_square_p(p.get_mpz_t()) == 0 || mpz_perfect_square_p(q.get_mpz_t()) == 0) return false;
    mpz_class rp, rq;
    mpz_sqrt(rp.get_mpz_t(), p.get_mpz_t());
    mpz_sqrt(rq.get_mpz_t(), q.get_mpz_t());
    root = Rational(rp, rq);
    root.canonicalize();
    return true;
}

/// Decimal approximation of sqrt(value) to `digits` significant digits,
/// rounded half to even, printed without trailing zeros.
inline std::string sqrt_decimal(const Rational& value, int digits = 12) {
    if (value < 0) throw DomainError("sqrt_decimal: negative argument");
    if (value == 0) return "0";
    const mpz_class& p = value.get_num();
    const mpz_class& q = value.get_den();
    // Find s with 10^(digits) <= floor(sqrt(value) * 10^s) < 10^(digits+1).
    auto scaled_root = [&](long s, bool& exact) {
        // floor(sqrt(p/q * 10^(2s)))
        mpz_class num = p, den = q, ten;
        mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(s >= 0 ? 2 * s : -2 * s));
        if (s >= 0)
            num *= ten;
        else
            den *= ten;
        mpz_class quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        mpz_class root, rrem;
        mpz_sqrtrem(root.get_mpz_t(), rrem.get_mpz_t(), quot.get_mpz_t());
        exact = rem == 0 && rrem == 0;
        return root;
    };
    mpz_class lo, hi;
    mpz_ui_pow_ui(lo.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    hi = lo * 10;
    // Initial guess from the bit sizes, then walk.
    long s = digits - static_cast<long>((static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
                                          static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10))) /
                                         2);
    bool exact = false;
    mpz_class d = scaled_root(s, exact);
    while (d >= hi) d = scaled_root(--s, exact);
    while (d < lo) d = scaled_root(++s, exact);
    // d has digits+1 significant digits; round away the last one.
    mpz_class keep = d / 10;
    const long last = mpz_class(d % 10).get_si();
    bool up = last > 5 || (last == 5 && !exact) || (last == 5 && exact && mpz_odd_p(keep.get_mpz_t()));
    if (up) keep += 1;
    long exponent = s - 1; // value ~= keep * 10^(-exponent)
    std::string ds = keep.get_str();
    if (static_cast<int>(ds.size()) > digits) { // carry produced an extra digit
        ds.pop_back();
        --exponent;
    }
    while (ds.size() > 1 && ds.back() == '0') {
        ds.pop_back();
        --exponent;
    }
    // value = ds * 10^(-exponent)
    const long int_digits = static_cast<long>(ds.size()) - exponent;
    std::string out;
    if (int_digits <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-int_digits), '0') + ds;
    } else if (int_digits >= static_cast<long>(ds.size())) {
        out = ds + std::string(static_cast<std::size_t>(int_digits - static_cast<long>(ds.size())), '0');
    } else {
        out = ds.substr(0, static_cast<std::size_t>(int_digits)) + "." + ds.substr(static_cast<std::size_t>(int_digits));
    }
    return out;
}

} // namespace ckpolar

#endif
