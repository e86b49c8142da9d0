#pragma once

#include <vector>

#include "bipoly.hpp"

namespace qdm {

// Square matrix over Z[q,x].
class PolyMatrix {
  public:
    explicit PolyMatrix(size_t n) : n_(n), entries_(n * n) {}

    size_t size() const { return n_; }
    BiPoly& at(size_t i, size_t j) { return entries_[i * n_ + j]; }
    const BiPoly& at(size_t i, size_t j) const { return entries_[i * n_ + j]; }

    static PolyMatrix identity(size_t n);

  private:
    size_t n_;
    std::vector<BiPoly> entries_;
};

// Exact determinant by single-step fraction-free (Bareiss) elimination.
// Every interior division is exact; zero pivots are handled by row swaps and
// a structurally singular matrix yields the zero polynomial.
BiPoly bareiss_det(PolyMatrix m);

} // namespace qdm
