#ifndef KNOTCONC_COVER_HPP
#define KNOTCONC_COVER_HPP

#include "knotconc/metabolizer.hpp"
#include "knotconc/seifert.hpp"
#include "knotconc/snf.hpp"

namespace knotconc {

// Finite abelian group as a list of invariant factors d1 | d2 | ..., each
// >= 2; the trivial group is the empty list. Elements are coordinate
// tuples mod the factors; the scalar label of an element is its mixed-radix
// index (most significant coordinate first), so rank-1 groups are labeled
// 0..N-1 in the obvious way.
struct FiniteAbelianGroup {
    std::vector<Int> factors;

    Int order() const;
    std::size_t rank() const { return factors.size(); }
    bool is_trivial() const { return factors.empty(); }

    std::vector<Int> zero() const { return std::vector<Int>(rank(), Int(0)); }
    std::vector<Int> reduce(std::vector<Int> coords) const;
    std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const;
    std::vector<Int> neg(const std::vector<Int>& a) const;
    bool is_zero(const std::vector<Int>& a) const;
    Int element_order(const std::vector<Int>& a) const;

    Int label_of(const std::vector<Int>& coords) const;
    std::vector<Int> element_at(Int label) const;

    bool operator==(const FiniteAbelianGroup& o) const { return factors == o.factors; }
};

// Invariant factors of the direct sum, remerged into a divisibility chain.
FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

// Cokernel coordinates of a presentation matrix M: Z^m / im(M) with the
// isomorphism x -> (U x) mod diag read off the Smith form.
struct CokernelProjection {
    FiniteAbelianGroup group;
    IntMatrix u;                   // row transform of the Smith form
    std::vector<std::size_t> keep; // rows of u with diagonal entry >= 2

    std::vector<Int> project(const std::vector<Int>& x) const;
};
CokernelProjection cokernel(const IntMatrix& presentation);

// Both presentation matrices of H1 of the n-fold cyclic branched cover,
// n a prime power, plus their cokernel coordinates.
struct CoverPresentation {
    unsigned long n = 0;
    IntMatrix small_mat; // 2g x 2g: P^n - (P-I)^n for the monodromy P
    IntMatrix block_mat; // 2gn x 2gn block circulant in P and I-P
    CokernelProjection small_coker;
    CokernelProjection block_coker;
};

IntMatrix presentation_small(const SeifertMatrix& s, const Int& n);
IntMatrix presentation_block(const SeifertMatrix& s, const Int& n);
CoverPresentation cover_presentation(const SeifertMatrix& s, const Int& n);

FiniteAbelianGroup homology(const SeifertMatrix& s, const Int& n);

// |Res(t^n - 1, Alexander polynomial)|: the order of H1 of the cover.
Int order_fox(const SeifertMatrix& s, const Int& n);

// Image of the n-fold diagonal embedding of a metabolizer Z inside the
// cokernel of the block presentation. Element labels are given in the
// Smith coordinates of that cokernel.
struct SubmoduleImage {
    FiniteAbelianGroup ambient;
    std::vector<Int> labels; // sorted, includes 0
    Int order;
};
SubmoduleImage submodule_image(const SeifertMatrix& s, const Metabolizer& z, const Int& n);

// throws NotPrimePower unless n = q^r with q prime, r >= 1
void require_prime_power(const Int& n);

} // namespace knotconc

#endif
