#include "bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace qdm {

namespace {

size_t coef_bits(const Integer& c) { return mpz_sizeinbase(c.get_mpz_t(), 2); }

size_t max_coef_bits(const std::vector<BiPoly::Term>& terms) {
    size_t m = 1;
    for (const auto& t : terms) m = std::max(m, coef_bits(t.coef));
    return m;
}

size_t ceil_log2(size_t n) {
    size_t b = 0;
    while ((size_t(1) << b) < n) ++b;
    return b;
}

} // namespace

// ---------------------------------------------------------------------------
// construction / canonical form

void BiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.key() < b.key(); });
    size_t out = 0;
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i + 1;
        Integer acc = terms_[i].coef;
        while (j < terms_.size() && terms_[j].key() == terms_[i].key()) {
            acc += terms_[j].coef;
            ++j;
        }
        if (acc != 0) {
            terms_[out].qd = terms_[i].qd;
            terms_[out].xd = terms_[i].xd;
            terms_[out].coef = std::move(acc);
            ++out;
        }
        i = j;
    }
    terms_.resize(out);
}

BiPoly BiPoly::constant(Integer c) { return monomial(0, 0, std::move(c)); }

BiPoly BiPoly::monomial(uint32_t qd, uint32_t xd, Integer coef) {
    BiPoly p;
    if (coef != 0) p.terms_.push_back(Term{qd, xd, std::move(coef)});
    return p;
}

uint32_t BiPoly::deg_q() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.qd);
    return d;
}

uint32_t BiPoly::deg_x() const { return terms_.empty() ? 0 : terms_.back().xd; }

Integer BiPoly::coeff(uint32_t qd, uint32_t xd) const {
    uint64_t key = (uint64_t(xd) << 32) | qd;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, uint64_t k) { return t.key() < k; });
    if (it != terms_.end() && it->key() == key) return it->coef;
    return Integer(0);
}

BiPoly BiPoly::x_coefficient(uint32_t k) const {
    BiPoly out;
    for (const auto& t : terms_)
        if (t.xd == k) out.terms_.push_back(Term{t.qd, 0, t.coef});
    return out;
}

// ---------------------------------------------------------------------------
// ring operations

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        uint64_t ka = a.terms_[i].key(), kb = b.terms_[j].key();
        if (ka < kb) {
            out.terms_.push_back(a.terms_[i++]);
        } else if (kb < ka) {
            out.terms_.push_back(b.terms_[j++]);
        } else {
            Integer c = a.terms_[i].coef + b.terms_[j].coef;
            if (c != 0) out.terms_.push_back(BiPoly::Term{a.terms_[i].qd, a.terms_[i].xd, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
    return out;
}

BiPoly BiPoly::operator-() const {
    BiPoly out(*this);
    for (auto& t : out.terms_) t.coef = -t.coef;
    return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

bool operator==(const BiPoly& a, const BiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].key() != b.terms_[i].key() || a.terms_[i].coef != b.terms_[i].coef)
            return false;
    }
    return true;
}

BiPoly mul_classical(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            out.terms_.push_back(BiPoly::Term{ta.qd + tb.qd, ta.xd + tb.xd, Integer(ta.coef * tb.coef)});
    out.normalize();
    return out;
}

// ---------------------------------------------------------------------------
// Kronecker codec: a bivariate polynomial packs into one big integer by
// evaluating at q = 2^w, x = 2^(w*stride) with slot width w a multiple of 64,
// so GMP's fast multiplication does the convolution. Packing is a ring
// homomorphism; faithful unpacking only requires that the result's
// coefficients fit in a signed slot.
class KroneckerCodec {
  public:
    KroneckerCodec(uint64_t stride, size_t slot_words) : stride_(stride), words_(slot_words) {}

    mpz_class pack(const BiPoly& p) const {
        if (p.is_zero()) return mpz_class(0);
        uint64_t nslots = p.terms_.back().qd + stride_ * uint64_t(p.terms_.back().xd) + 1;
        for (const auto& t : p.terms_)
            nslots = std::max(nslots, t.qd + stride_ * uint64_t(t.xd) + 1);
        std::vector<mp_limb_t> pos(nslots * words_, 0), neg(nslots * words_, 0);
        bool has_pos = false, has_neg = false;
        for (const auto& t : p.terms_) {
            uint64_t slot = t.qd + stride_ * uint64_t(t.xd);
            const mpz_srcptr c = t.coef.get_mpz_t();
            size_t ls = mpz_size(c);
            mp_limb_t* dst = (mpz_sgn(c) > 0 ? pos.data() : neg.data()) + slot * words_;
            for (size_t k = 0; k < ls; ++k) dst[k] = mpz_getlimbn(c, k);
            (mpz_sgn(c) > 0 ? has_pos : has_neg) = true;
        }
        mpz_class P(0), M(0);
        if (has_pos) mpz_import(P.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
        if (has_neg) mpz_import(M.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
        return mpz_class(P - M);
    }

    // Decode assuming every coefficient fits in a signed slot; returns false
    // when the decode is inconsistent (slot overflow), so callers can retry
    // with a wider slot.
    bool unpack(const mpz_class& n, uint64_t nslots, BiPoly* out) const {
        out->terms_.clear();
        if (n == 0) return true;
        const size_t w_bits = words_ * GMP_LIMB_BITS;
        mpz_class modulus_window;
        mpz_fdiv_r_2exp(modulus_window.get_mpz_t(), n.get_mpz_t(), w_bits * nslots);
        if (modulus_window == 0) return false; // nonzero input entirely outside the grid
        std::vector<mp_limb_t> buf(nslots * words_ + 1, 0);
        size_t count = 0;
        mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, modulus_window.get_mpz_t());
        (void)count;

        mpz_class slotval, half, full;
        mpz_setbit(half.get_mpz_t(), w_bits - 1);
        mpz_setbit(full.get_mpz_t(), w_bits);
        int carry = 0;
        for (uint64_t s = 0; s < nslots; ++s) {
            mpz_import(slotval.get_mpz_t(), words_, -1, sizeof(mp_limb_t), 0, 0, buf.data() + s * words_);
            if (carry) slotval += carry;
            carry = 0;
            if (slotval >= half) {
                slotval -= full;
                carry = 1;
            }
            if (slotval != 0) {
                uint64_t qd = s % stride_;
                uint64_t xd = s / stride_;
                out->terms_.push_back(BiPoly::Term{uint32_t(qd), uint32_t(xd), Integer(slotval)});
            }
        }
        // a negative input consumes one final borrow; anything else overflowed
        return carry == (mpz_sgn(n.get_mpz_t()) < 0 ? 1 : 0);
    }

  private:
    uint64_t stride_;
    size_t words_;
};

BiPoly mul_kronecker(const BiPoly& a, const BiPoly& b) {
    uint64_t stride = uint64_t(a.deg_q()) + b.deg_q() + 1;
    uint64_t nslots = stride * (uint64_t(a.deg_x()) + b.deg_x() + 1);
    size_t bits = max_coef_bits(a.terms_) + max_coef_bits(b.terms_) +
                  ceil_log2(std::min(a.term_count(), b.term_count())) + 2;
    size_t words = (bits + GMP_LIMB_BITS - 1) / GMP_LIMB_BITS;
    KroneckerCodec codec(stride, words);
    mpz_class prod = codec.pack(a) * codec.pack(b);
    BiPoly out;
    bool ok = codec.unpack(prod, nslots, &out);
    if (!ok) fail(errc::invalid_parameter, "internal: kronecker multiply slot overflow");
    return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    if (a.term_count() == 1 || b.term_count() == 1 || a.term_count() * b.term_count() <= 4096)
        return mul_classical(a, b);
    return mul_kronecker(a, b);
}

BiPoly BiPoly::pow(uint32_t e) const {
    BiPoly r = BiPoly::constant(1);
    BiPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

// ---------------------------------------------------------------------------
// exact division

namespace {

// Long division cancelling leading terms in (x, q)-lex order. Exactness of
// the division guarantees each leading-term cancellation is possible; any
// failure is a NotDivisible witness.
BiPoly divexact_classical(const BiPoly& a, const BiPoly& b) {
    BiPoly rem = a;
    BiPoly quot;
    const BiPoly::Term& lb = b.terms().back();
    while (!rem.is_zero()) {
        const BiPoly::Term& lt = rem.terms().back();
        if (lt.xd < lb.xd || lt.qd < lb.qd || !mpz_divisible_p(lt.coef.get_mpz_t(), lb.coef.get_mpz_t()))
            fail(errc::not_divisible, "polynomial division has nonzero remainder");
        Integer c;
        mpz_divexact(c.get_mpz_t(), lt.coef.get_mpz_t(), lb.coef.get_mpz_t());
        BiPoly t = BiPoly::monomial(lt.qd - lb.qd, lt.xd - lb.xd, std::move(c));
        quot += t;
        rem -= t * b;
    }
    return quot;
}

} // namespace

BiPoly BiPoly::divexact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) fail(errc::not_divisible, "division by the zero polynomial");
    if (a.is_zero()) return BiPoly();
    if (a.deg_q() < b.deg_q() || a.deg_x() < b.deg_x())
        fail(errc::not_divisible, "divisor degree exceeds dividend degree");
    if (b.term_count() == 1) {
        // monomial divisor: per-term division
        const Term& m = b.terms_.front();
        BiPoly out;
        out.terms_.reserve(a.term_count());
        for (const auto& t : a.terms_) {
            if (t.qd < m.qd || t.xd < m.xd || !mpz_divisible_p(t.coef.get_mpz_t(), m.coef.get_mpz_t()))
                fail(errc::not_divisible, "polynomial division has nonzero remainder");
            Integer c;
            mpz_divexact(c.get_mpz_t(), t.coef.get_mpz_t(), m.coef.get_mpz_t());
            out.terms_.push_back(Term{t.qd - m.qd, t.xd - m.xd, std::move(c)});
        }
        return out;
    }
    if (a.term_count() * b.term_count() <= 4096) return divexact_classical(a, b);

    // Packed path: packing is evaluation at powers of two, so exact
    // polynomial division implies exact integer division of the packed
    // values. Slot width only has to accommodate the quotient, which we
    // cannot know in advance; verify by multiplying back and widen on demand.
    uint64_t stride = uint64_t(a.deg_q()) + 1;
    uint32_t cq = a.deg_q() - b.deg_q(), cx = a.deg_x() - b.deg_x();
    uint64_t nslots = uint64_t(cq) + stride * uint64_t(cx) + 1;
    size_t bits = max_coef_bits(a.terms_) + max_coef_bits(b.terms_) +
                  ceil_log2(std::min(a.term_count(), b.term_count())) + 4;
    for (int attempt = 0; attempt < 3; ++attempt) {
        size_t words = (bits + GMP_LIMB_BITS - 1) / GMP_LIMB_BITS;
        KroneckerCodec codec(stride, words);
        mpz_class na = codec.pack(a), nb = codec.pack(b);
        if (!mpz_divisible_p(na.get_mpz_t(), nb.get_mpz_t()))
            fail(errc::not_divisible, "polynomial division has nonzero remainder");
        mpz_class nc;
        mpz_divexact(nc.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
        BiPoly c;
        if (codec.unpack(nc, nslots, &c) && c.deg_q() <= cq && c.deg_x() <= cx && c * b == a)
            return c;
        bits *= 2;
    }
    return divexact_classical(a, b);
}

// ---------------------------------------------------------------------------
// evaluation / substitution

GQPoly BiPoly::eval_q(const GaussianRational& q_val) const {
    std::vector<GaussianRational> pow_cache(deg_q() + 1);
    pow_cache[0] = GaussianRational(Rational(1));
    for (size_t i = 1; i < pow_cache.size(); ++i) pow_cache[i] = pow_cache[i - 1] * q_val;
    std::vector<GaussianRational> out(deg_x() + 1);
    for (const auto& t : terms_) {
        GaussianRational add = pow_cache[t.qd];
        add.re *= Rational(t.coef);
        add.im *= Rational(t.coef);
        out[t.xd] = out[t.xd] + add;
    }
    return GQPoly(std::move(out));
}

GaussianRational BiPoly::eval(const GaussianRational& q_val, const GaussianRational& x_val) const {
    return eval_q(q_val).eval(x_val);
}

BiPoly BiPoly::substitute_x(const BiPoly& s) const {
    if (is_zero()) return BiPoly();
    uint32_t dx = deg_x();
    // Horner in x with coefficients in Z[q]
    BiPoly r = x_coefficient(dx);
    for (uint32_t k = dx; k-- > 0;) r = r * s + x_coefficient(k);
    return r;
}

// ---------------------------------------------------------------------------
// canonical text form

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = terms_.size(); i-- > 0;) {
        const Term& t = terms_[i];
        bool neg = t.coef < 0;
        Integer mag = neg ? Integer(-t.coef) : t.coef;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool has_var = t.qd > 0 || t.xd > 0;
        if (!has_var) {
            os << mag.get_str();
            continue;
        }
        bool printed = false;
        if (mag != 1) {
            os << mag.get_str();
            printed = true;
        }
        if (t.qd > 0) {
            if (printed) os << "*";
            os << "q";
            if (t.qd > 1) os << "^" << t.qd;
            printed = true;
        }
        if (t.xd > 0) {
            if (printed) os << "*";
            os << "x";
            if (t.xd > 1) os << "^" << t.xd;
        }
    }
    return os.str();
}

BiPoly BiPoly::from_string(const std::string& text) {
    BiPoly out;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
    };
    skip_ws();
    if (pos == text.size()) fail(errc::parse_error, "empty polynomial text");
    bool any = false;
    while (true) {
        skip_ws();
        if (pos == text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1;
            pos++;
            skip_ws();
        } else if (any) {
            fail(errc::parse_error, "expected '+' or '-' between terms");
        }
        // term: factors separated by '*'
        Integer coef(sign);
        uint32_t qd = 0, xd = 0;
        bool term_any = false;
        while (true) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::string num;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) num += text[pos++];
                coef *= Integer(num);
                term_any = true;
            } else if (pos < text.size() && (text[pos] == 'q' || text[pos] == 'x')) {
                char var = text[pos++];
                uint32_t e = 1;
                if (pos < text.size() && text[pos] == '^') {
                    pos++;
                    std::string num;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) num += text[pos++];
                    if (num.empty()) fail(errc::parse_error, "missing exponent");
                    unsigned long v = std::stoul(num);
                    e = uint32_t(v);
                }
                (var == 'q' ? qd : xd) += e;
                term_any = true;
            } else {
                fail(errc::parse_error, "expected a coefficient, 'q' or 'x' at position " + std::to_string(pos));
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                pos++;
                continue;
            }
            break;
        }
        if (!term_any) fail(errc::parse_error, "empty term");
        out.terms_.push_back(Term{qd, xd, std::move(coef)});
        any = true;
    }
    if (!any) fail(errc::parse_error, "no terms parsed");
    out.normalize();
    return out;
}

} // namespace qdm
