#ifndef KNOTCONC_DINV_HPP
#define KNOTCONC_DINV_HPP

#include <string>

#include "knotconc/cover.hpp"

namespace knotconc {

// Correction terms as a total function on a finite abelian group, indexed
// by element label. Label 0 is the basepoint structure. Tables must be
// conjugation symmetric: value(m) = value(-m).
struct CorrectionTable {
    FiniteAbelianGroup group;
    std::vector<Rat> values; // dense over labels 0..order-1

    Rat at_label(const Int& label) const;
    Rat at(const std::vector<Int>& elem) const { return at_label(group.label_of(elem)); }

    // value(m) - value(0)
    CorrectionTable barred() const;

    void validate() const;

    std::string to_json() const;
    static CorrectionTable from_json(const std::string& text);
    static CorrectionTable read_file(const std::string& path);
};

// L(p, q) parameters, normalized to 0 < q < p coprime (p = 1 is S^3).
struct LensParams {
    Int p, q;
    static LensParams normalized(Int p, Int q);
};

// Correction term of the double branched cover of the k-twist knot at the
// structure labeled j in Z/(4k+1): the closed form on 0 <= j <= 2k, the
// conjugate value elsewhere. k must be >= 0.
Rat d_twist(const Int& k, Int j);

// Lens space correction term by the Euclidean recursion
//   d(p, q, i) = ((2i+1-p-q)^2 - pq)/(4pq) - d(q, p mod q, i mod q)
// with d(1, 0, 0) = 0.
Rat d_lens(const Int& p, const Int& q, const Int& i);

// Relabeling that matches the recursion's values to the twist closed form:
// sign * d_lens(4k+1, 2, mult*j + offset) = d_twist(k, j) for all j.
struct Alignment {
    int sign = 1;
    Int mult = 1;
    Int offset = 0;
};
Alignment align(const Int& k);

CorrectionTable d_twist_table(const Int& k);
// d-bar table: value(j) - value(0). d_twist(k, 0) = 0, so this equals the
// raw table; the construction asserts that.
CorrectionTable dbar_table(const Int& k);

} // namespace knotconc

#endif
