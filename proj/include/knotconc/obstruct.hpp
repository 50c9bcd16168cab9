#ifndef KNOTCONC_OBSTRUCT_HPP
#define KNOTCONC_OBSTRUCT_HPP

#include "knotconc/cover.hpp"
#include "knotconc/dinv.hpp"
#include "knotconc/metabolizer.hpp"

namespace knotconc {

// All metabolizers whose basis vectors have entries bounded by bound,
// deduplicated up to equal span; exhaustive within the bound. For genus 1
// this is the set of primitive isotropic vectors up to sign.
std::vector<Metabolizer> metabolizer_search(const SeifertMatrix& s, const Int& bound);

// Splits a metabolizer of the block sum into metabolizers of the factors
// by lattice intersection with the coordinate summands. Requires coprime
// Alexander polynomials and at least one nonsingular form.
std::pair<Metabolizer, Metabolizer> split_metabolizer(const SeifertMatrix& s1, const SeifertMatrix& s2,
                                                      const Metabolizer& z);

// Order-p subgroups of a finite abelian group, each as its sorted element
// labels; when built from a table, sums holds the value sum over each
// subgroup.
struct SubgroupFamily {
    Int p;
    std::vector<std::vector<Int>> subgroups;
    std::vector<Rat> sums;
};
SubgroupFamily order_p_subgroups(const FiniteAbelianGroup& e, const Int& p);
SubgroupFamily subgroup_sums(const CorrectionTable& table, const Int& p);

// min |sum n_H s_H| over nonnegative integer coefficients, not all zero.
// Exact closed form: 0 if any sum is 0 or the signs are mixed, otherwise
// the smallest magnitude. coefficients witness the minimum.
struct ObstructionValue {
    Rat value;
    std::vector<Int> coefficients;
};
ObstructionValue min_nonneg_combination(const std::vector<Rat>& sums);

// The subgroup-sum obstruction of a correction table at the prime p;
// 0 by definition when p does not divide the group order.
ObstructionValue d_obstruction(const CorrectionTable& table, const Int& p);

// Primes q <= qmax such that p divides the homology order of some q^r-fold
// cover with r <= rmax. A bounded under-approximation of the full set.
struct PrimeSet {
    Int p;
    std::vector<Int> members;
    Int qmax, rmax;
};
PrimeSet cover_order_prime_set(const SeifertMatrix& s, const Int& p, const Int& qmax, const Int& rmax);

// Sylvester matrix of 1+t+...+t^{m-1} and 1+t+...+t^{n-1}: n-1 rows with
// m ones, then m-1 rows with n ones.
IntMatrix ones_sylvester_matrix(unsigned long m, unsigned long n);
// Its determinant (+-1 iff gcd(m, n) = 1, else 0), cross-checked against
// the subresultant route.
Int ones_sylvester_det(unsigned long m, unsigned long n);

enum class AlgClass { InfiniteOrder, AlgebraicallySlice, FiniteOrder };
AlgClass twist_alg_class(const Int& k);
std::string alg_class_str(AlgClass c);

// All subgroups of the given order. Unique per divisor for cyclic groups;
// lattice search (guarded by group size) otherwise.
std::vector<std::vector<Int>> subgroups_of_order(const FiniteAbelianGroup& e, const Int& order);

// Necessary-condition check for sliceness: some subgroup M with
// |M|^2 = |H1| on which the barred correction terms vanish. A pass is
// never a sliceness proof.
enum class VerdictKind { Passes, NoSquareOrderSubgroup, NoVanishingSubgroup };
struct SubgroupEvidence {
    std::vector<Int> labels;
    std::vector<Rat> dbar;
    bool vanishes;
};
struct Verdict {
    VerdictKind kind;
    Int h1_order;
    Int root;                 // sqrt(|H1|) when it is a perfect square
    std::vector<Int> witness; // labels of a vanishing subgroup, when Passes
    std::vector<SubgroupEvidence> evidence;
};
Verdict slice_obstruction_verdict(const SeifertMatrix& s, const Int& n, const CorrectionTable& table);
// auto-derived table; only the twist catalog with n = 2 has one
Verdict slice_obstruction_verdict_twist(const Int& k);

// One row per (k, prime p | 4k+1): the double-cover subgroup-sum
// obstruction and the algebraic concordance class.
struct TwistReportRow {
    Int k;
    Int p;
    Rat obstruction;
    AlgClass alg_class;
};
std::vector<TwistReportRow> twist_report(const Int& kmax);

} // namespace knotconc

#endif
