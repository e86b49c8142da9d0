#include "expdist.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdm {

PolyMatrix build_dq(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm = all_pairs_distances(g);
    PolyMatrix m{size_t(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int d = dm.at(i, j);
            if (d != kUnreachable) m.at(i, j) = BiPoly::monomial(uint32_t(d), 0, 1);
        }
    return m;
}

BiPoly charpoly(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm = all_pairs_distances(g);
    PolyMatrix m{size_t(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                m.at(i, j) = BiPoly::var_x() - BiPoly::constant(1);
            } else {
                int d = dm.at(i, j);
                if (d != kUnreachable) m.at(i, j) = BiPoly::monomial(uint32_t(d), 0, -1);
            }
        }
    return bareiss_det(std::move(m));
}

namespace {

// Fraction-free elimination over GQ[x]; divisions are exact polynomial
// divisions (monic-leading after scaling is unnecessary since GQ is a field).
GQPoly gq_divexact(const GQPoly& a, const GQPoly& b) {
    if (b.is_zero()) fail(errc::not_divisible, "division by zero polynomial");
    if (a.is_zero()) return GQPoly();
    std::vector<GaussianRational> rem(a.coeffs());
    int db = b.degree();
    GaussianRational lead = b.coeff(size_t(db));
    int dq = a.degree() - db;
    if (dq < 0) fail(errc::not_divisible, "quotient degree negative");
    std::vector<GaussianRational> quot(size_t(dq) + 1);
    for (int k = dq; k >= 0; --k) {
        GaussianRational c = rem[size_t(k + db)] / lead;
        quot[size_t(k)] = c;
        if (!c.is_zero())
            for (int j = 0; j <= db; ++j)
                rem[size_t(k + j)] = rem[size_t(k + j)] - c * b.coeff(size_t(j));
    }
    for (const auto& r : rem)
        if (!r.is_zero()) fail(errc::not_divisible, "polynomial division has nonzero remainder");
    return GQPoly(std::move(quot));
}

GQPoly gq_bareiss_det(std::vector<GQPoly> m, int n) {
    if (n == 0) return GQPoly::constant(GaussianRational(Rational(1)));
    auto at = [&](int i, int j) -> GQPoly& { return m[size_t(i) * n + j]; };
    int sign = 1;
    GQPoly prev = GQPoly::constant(GaussianRational(Rational(1)));
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            int r = k + 1;
            while (r < n && at(r, k).is_zero()) ++r;
            if (r == n) return GQPoly();
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
            sign = -sign;
        }
        GQPoly pivot = at(k, k);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = gq_divexact(at(i, j) * pivot - at(i, k) * at(k, j), prev);
            at(i, k) = GQPoly();
        }
        prev = pivot;
    }
    GQPoly det = at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

} // namespace

GQPoly charpoly_at_q(const Graph& g, const GaussianRational& q_val) {
    const int n = g.order();
    DistanceMatrix dm = all_pairs_distances(g);
    std::vector<GaussianRational> powers(size_t(diameter(g)) + 1);
    powers[0] = GaussianRational(Rational(1));
    for (size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * q_val;
    std::vector<GQPoly> m(size_t(n) * n);
    const GaussianRational one(Rational(1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                m[size_t(i) * n + j] = GQPoly({-one, one}); // x - 1
            } else {
                int d = dm.at(i, j);
                if (d != kUnreachable) m[size_t(i) * n + j] = GQPoly::constant(-powers[size_t(d)]);
            }
        }
    return gq_bareiss_det(std::move(m), n);
}

bool are_dq_cospectral(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    return charpoly(g) == charpoly(h);
}

bool are_cospectral_at(const Graph& g, const GaussianRational& qg,
                       const Graph& h, const GaussianRational& qh) {
    if (g.order() != h.order()) return false;
    return charpoly_at_q(g, qg) == charpoly_at_q(h, qh);
}

std::string charpoly_eval_key(const Graph& g) {
    std::ostringstream os;
    os << charpoly_at_q(g, GaussianRational(Rational(2))).str() << "|"
       << charpoly_at_q(g, GaussianRational(Rational(3))).str();
    return os.str();
}

// ---------------------------------------------------------------------------
// numeric spectra (cyclic Jacobi)

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[size_t(i) * n + j]; };
    auto off_frobenius = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };
    const double tol = 1e-12;
    for (int sweep = 0; sweep < 100 && off_frobenius() >= tol; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int qv = p + 1; qv < n; ++qv) {
                double apq = at(p, qv);
                if (std::fabs(apq) < 1e-300) continue;
                double theta = (at(qv, qv) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                double tau = s / (1 + c);
                double app = at(p, p), aqq = at(qv, qv);
                at(p, p) = app - t * apq;
                at(qv, qv) = aqq + t * apq;
                at(p, qv) = at(qv, p) = 0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == qv) continue;
                    double arp = at(r, p), arq = at(r, qv);
                    at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
                    at(r, qv) = at(qv, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }
    std::vector<double> eig(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) eig[size_t(i)] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double NumericSpectrum::spectral_radius() const {
    double r = 0;
    for (double v : eigenvalues) r = std::max(r, std::fabs(v));
    return r;
}

NumericSpectrum numeric_spectrum(const Graph& g, const Rational& q_val) {
    const int n = g.order();
    DistanceMatrix dm = all_pairs_distances(g);
    double q = q_val.get_d();
    std::vector<double> m(size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int d = dm.at(i, j);
            if (d != kUnreachable) m[size_t(i) * n + j] = std::pow(q, d);
        }
    NumericSpectrum out;
    out.q_value = q_val;
    out.eigenvalues = symmetric_eigenvalues(std::move(m), n);
    return out;
}

} // namespace qdm
