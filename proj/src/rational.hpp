#pragma once

#include <gmpxx.h>
#include <string>

#include "error.hpp"

namespace qdm {

using Integer = mpz_class;
using Rational = mpq_class; // canonicalized, denominator > 0

inline std::string to_string(const Rational& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

// Gaussian rational a + b*i. The only non-real evaluation points the library
// needs are q = +-2i, but the ops below are general.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    bool is_real() const { return im == 0; }
    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational nrm(b.re * b.re + b.im * b.im);
        if (nrm == 0) fail(errc::invalid_parameter, "division by zero GaussianRational");
        return {Rational((a.re * b.re + a.im * b.im) / nrm), Rational((a.im * b.re - a.re * b.im) / nrm)};
    }
    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational pow(unsigned long k) const {
        GaussianRational r(Rational(1));
        GaussianRational base = *this;
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    std::string str() const;
};

// Text form: "3", "-1/2", "2i", "-2i", "1/2+3i", "1-2i". Decimal literals are
// rejected so callers cannot silently lose exactness.
GaussianRational parse_q_literal(const std::string& text);

std::string to_string(const GaussianRational& v);

inline std::string GaussianRational::str() const { return to_string(*this); }

} // namespace qdm
