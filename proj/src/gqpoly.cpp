#include "gqpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qdm {

std::string to_string(const GaussianRational& v) {
    if (v.im == 0) return to_string(v.re);
    std::string im_part = to_string(v.im) + "i";
    if (v.im == 1) im_part = "i";
    if (v.im == -1) im_part = "-i";
    if (v.re == 0) return im_part;
    std::string s = to_string(v.re);
    if (v.im > 0) s += "+";
    return s + im_part;
}

GaussianRational parse_q_literal(const std::string& text) {
    // grammar: [sign] num [/den] [i]  [ [sign] num [/den] i ]
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
    };
    auto parse_part = [&](bool& is_im) -> Rational {
        skip_ws();
        std::string numtxt;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) numtxt += text[pos++];
        skip_ws();
        size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            numtxt += text[pos++];
            digits++;
        }
        if (pos < text.size() && text[pos] == '.')
            fail(errc::bad_q_literal, "decimal q literals are rejected; use an exact rational like 1/2");
        std::string dentxt = "1";
        if (pos < text.size() && text[pos] == '/') {
            pos++;
            dentxt.clear();
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) dentxt += text[pos++];
            if (dentxt.empty()) fail(errc::bad_q_literal, "missing denominator in q literal");
        }
        is_im = false;
        if (pos < text.size() && text[pos] == 'i') {
            pos++;
            is_im = true;
            if (digits == 0) numtxt += "1"; // bare "i" / "-i"
        } else if (digits == 0) {
            fail(errc::bad_q_literal, "malformed q literal: '" + text + "'");
        }
        Rational r{Integer(numtxt), Integer(dentxt)};
        r.canonicalize();
        return r;
    };

    bool im1 = false;
    Rational first = parse_part(im1);
    GaussianRational out;
    if (im1)
        out.im = first;
    else
        out.re = first;
    skip_ws();
    if (pos < text.size()) {
        bool im2 = false;
        Rational second = parse_part(im2);
        if (!im2 || im1) fail(errc::bad_q_literal, "malformed q literal: '" + text + "'");
        out.im = second;
        skip_ws();
    }
    if (pos != text.size()) fail(errc::bad_q_literal, "trailing characters in q literal: '" + text + "'");
    return out;
}

void GQPoly::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GQPoly GQPoly::constant(const GaussianRational& v) {
    GQPoly p;
    if (!v.is_zero()) p.c_ = {v};
    return p;
}

GQPoly GQPoly::monomial(size_t deg, const GaussianRational& v) {
    GQPoly p;
    if (!v.is_zero()) {
        p.c_.assign(deg + 1, GaussianRational());
        p.c_[deg] = v;
    }
    return p;
}

GQPoly operator+(const GQPoly& a, const GQPoly& b) {
    std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return GQPoly(std::move(out));
}

GQPoly operator-(const GQPoly& a, const GQPoly& b) {
    std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return GQPoly(std::move(out));
}

GQPoly GQPoly::operator-() const {
    GQPoly p(*this);
    for (auto& v : p.c_) v = -v;
    return p;
}

GQPoly operator*(const GQPoly& a, const GQPoly& b) {
    if (a.is_zero() || b.is_zero()) return GQPoly();
    std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return GQPoly(std::move(out));
}

GaussianRational GQPoly::eval(const GaussianRational& v) const {
    GaussianRational r;
    for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
}

GQPoly GQPoly::div_linear(const GaussianRational& r, GaussianRational* rem) const {
    if (c_.empty()) {
        if (rem) *rem = GaussianRational();
        return GQPoly();
    }
    std::vector<GaussianRational> out(c_.size() - 1);
    GaussianRational carry;
    for (size_t i = c_.size(); i-- > 1;) {
        carry = c_[i] + carry * r;
        out[i - 1] = carry;
    }
    if (rem) *rem = c_[0] + carry * r;
    return GQPoly(std::move(out));
}

int GQPoly::root_multiplicity(const GaussianRational& r) const {
    int m = 0;
    GQPoly p(*this);
    while (!p.is_zero()) {
        GaussianRational rem;
        GQPoly quo = p.div_linear(r, &rem);
        if (!rem.is_zero()) break;
        ++m;
        p = quo;
    }
    return m;
}

std::string GQPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const GaussianRational& v = c_[i];
        if (v.is_zero()) continue;
        bool complex_coef = v.im != 0;
        std::string mag;
        bool neg = false;
        if (complex_coef) {
            mag = "(" + to_string(v) + ")";
        } else {
            neg = v.re < 0;
            Rational a = neg ? Rational(-v.re) : v.re;
            mag = to_string(a);
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << mag;
        } else {
            if (complex_coef || mag != "1") os << mag << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace qdm
