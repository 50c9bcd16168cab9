#ifndef KNOTCONC_SNF_HPP
#define KNOTCONC_SNF_HPP

#include "knotconc/int_matrix.hpp"

namespace knotconc {

// Smith normal form U * M * V = D with D diagonal, nonnegative, and
// d1 | d2 | ... (zeros last). U and V are unimodular.
struct SnfResult {
    std::vector<Int> diag; // length min(rows, cols)
    IntMatrix U;           // rows x rows
    IntMatrix V;           // cols x cols

    // D embedded in the shape of the input
    IntMatrix diag_matrix(std::size_t rows, std::size_t cols) const;
    // product of the nonzero invariant factors (1 for the empty list)
    Int nonzero_product() const;
    bool has_zero() const;
};

SnfResult snf(const IntMatrix& m);

// Invariant factors >= 2 (Smith diagonal with units dropped). Throws
// InfiniteHomology if a zero factor appears and allow_zero is false.
std::vector<Int> invariant_factors(const IntMatrix& m, bool allow_zero = true);

} // namespace knotconc

#endif
