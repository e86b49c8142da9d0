#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace qdm {

// Univariate polynomial in x over Gaussian rationals. Used for charpolys at a
// fixed q, component extraction at q=1 and the distance-matrix transform.
class GQPoly {
  public:
    GQPoly() = default;
    explicit GQPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static GQPoly zero() { return GQPoly(); }
    static GQPoly constant(const GaussianRational& v);
    static GQPoly monomial(size_t deg, const GaussianRational& v);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return int(c_.size()) - 1; }
    GaussianRational coeff(size_t k) const {
        return k < c_.size() ? c_[k] : GaussianRational();
    }
    const std::vector<GaussianRational>& coeffs() const { return c_; }

    friend GQPoly operator+(const GQPoly& a, const GQPoly& b);
    friend GQPoly operator-(const GQPoly& a, const GQPoly& b);
    friend GQPoly operator*(const GQPoly& a, const GQPoly& b);
    GQPoly operator-() const;
    friend bool operator==(const GQPoly& a, const GQPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const GQPoly& a, const GQPoly& b) { return !(a == b); }

    GaussianRational eval(const GaussianRational& v) const;

    // Synthetic division by (x - r); remainder returned through *rem.
    GQPoly div_linear(const GaussianRational& r, GaussianRational* rem = nullptr) const;

    // Multiplicity of r as a root (0 when p(r) != 0).
    int root_multiplicity(const GaussianRational& r) const;

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<GaussianRational> c_; // ascending, highest coefficient nonzero

    void strip();
};

} // namespace qdm
