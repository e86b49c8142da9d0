#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gqpoly.hpp"
#include "rational.hpp"

namespace qdm {

// Exact polynomial in the two indeterminates q and x over arbitrary-precision
// integers. Canonical form: terms sorted by (deg_x, deg_q) ascending, no zero
// coefficients stored. Values are immutable in spirit: every operation
// returns a fresh canonical polynomial, so sharing across threads is safe.
class BiPoly {
  public:
    struct Term {
        uint32_t qd = 0;
        uint32_t xd = 0;
        Integer coef;
        uint64_t key() const { return (uint64_t(xd) << 32) | qd; }
    };

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(Integer c);
    static BiPoly monomial(uint32_t qd, uint32_t xd, Integer coef);
    static BiPoly var_q() { return monomial(1, 0, 1); }
    static BiPoly var_x() { return monomial(0, 1, 1); }

    bool is_zero() const { return terms_.empty(); }
    uint32_t deg_q() const;
    uint32_t deg_x() const;
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Coefficient of q^qd x^xd (zero if absent).
    Integer coeff(uint32_t qd, uint32_t xd) const;
    // Coefficient of x^k as a polynomial in q alone.
    BiPoly x_coefficient(uint32_t k) const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend bool operator==(const BiPoly& a, const BiPoly& b);
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(uint32_t e) const;

    // Exact quotient a/b in Z[q,x]; throws errc::not_divisible if b does not
    // divide a (which inside Bareiss would mean broken pivot bookkeeping).
    static BiPoly divexact(const BiPoly& a, const BiPoly& b);

    // Partial/full evaluation at q (exact Gaussian-rational arithmetic).
    GQPoly eval_q(const GaussianRational& q_val) const;
    GaussianRational eval(const GaussianRational& q_val, const GaussianRational& x_val) const;

    // p with x replaced by s, expanded and canonical.
    BiPoly substitute_x(const BiPoly& s) const;

    // Canonical text: terms sorted by (deg_x desc, deg_q desc),
    // e.g. "x^2 - 2*x - q^2 + 1". from_string round-trips exactly.
    std::string str() const;
    static BiPoly from_string(const std::string& text);

  private:
    std::vector<Term> terms_; // sorted by key() ascending, coefs nonzero

    void normalize(); // sort + combine + strip zeros
    friend BiPoly mul_classical(const BiPoly& a, const BiPoly& b);
    friend BiPoly mul_kronecker(const BiPoly& a, const BiPoly& b);
    friend class KroneckerCodec;
};

} // namespace qdm
