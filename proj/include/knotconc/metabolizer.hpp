#ifndef KNOTCONC_METABOLIZER_HPP
#define KNOTCONC_METABOLIZER_HPP

#include "knotconc/seifert.hpp"

namespace knotconc {

// A metabolizer of the Seifert form: g basis vectors in Z^{2g} spanning a
// direct summand on which the form vanishes identically.
struct Metabolizer {
    std::vector<std::vector<Int>> basis;

    std::size_t rank() const { return basis.size(); }
    IntMatrix basis_matrix() const; // rank x 2g
    // canonical (Hermite) basis of the span, for comparing spans
    IntMatrix canonical_basis() const;
    bool same_span(const Metabolizer& o) const;
};

// Checks rank g, isotropy theta(x, y) = 0 for all basis pairs in both
// orders, and that the span is a direct summand (all Smith invariant
// factors of the basis matrix are 1).
bool is_metabolizer(const SeifertMatrix& s, const Metabolizer& z);
// Same check, throwing NotMetabolizer with a reason.
void require_metabolizer(const SeifertMatrix& s, const Metabolizer& z);

} // namespace knotconc

#endif
