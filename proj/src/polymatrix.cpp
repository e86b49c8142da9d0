#include "polymatrix.hpp"

namespace qdm {

PolyMatrix PolyMatrix::identity(size_t n) {
    PolyMatrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = BiPoly::constant(1);
    return m;
}

BiPoly bareiss_det(PolyMatrix m) {
    const size_t n = m.size();
    if (n == 0) return BiPoly::constant(1);
    int sign = 1;
    BiPoly prev = BiPoly::constant(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            size_t r = k + 1;
            while (r < n && m.at(r, k).is_zero()) ++r;
            if (r == n) return BiPoly::zero();
            for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
            sign = -sign;
        }
        const BiPoly& pivot = m.at(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                BiPoly num = m.at(i, j) * pivot - m.at(i, k) * m.at(k, j);
                m.at(i, j) = BiPoly::divexact(num, prev);
            }
            m.at(i, k) = BiPoly::zero();
        }
        prev = pivot;
    }
    BiPoly det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

} // namespace qdm
