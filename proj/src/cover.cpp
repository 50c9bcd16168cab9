#include "knotconc/cover.hpp"

#include <map>

#include "knotconc/resultant.hpp"

namespace knotconc {

Int FiniteAbelianGroup::order() const {
    Int p = 1;
    for (const auto& d : factors) p *= d;
    return p;
}

std::vector<Int> FiniteAbelianGroup::reduce(std::vector<Int> coords) const {
    if (coords.size() != rank()) fail(Errc::Internal, "group element has wrong rank");
    for (std::size_t i = 0; i < coords.size(); ++i) {
        mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), factors[i].get_mpz_t());
    }
    return coords;
}

std::vector<Int> FiniteAbelianGroup::add(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = a[i] + b[i];
    return reduce(std::move(c));
}

std::vector<Int> FiniteAbelianGroup::neg(const std::vector<Int>& a) const {
    std::vector<Int> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = -a[i];
    return reduce(std::move(c));
}

bool FiniteAbelianGroup::is_zero(const std::vector<Int>& a) const {
    for (const auto& x : a)
        if (sgn(x) != 0) return false;
    return true;
}

Int FiniteAbelianGroup::element_order(const std::vector<Int>& a) const {
    Int o = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (sgn(a[i]) == 0) continue;
        Int oi = exact_div(factors[i], gcd(a[i], factors[i]));
        o = lcm(o, oi);
    }
    return o;
}

Int FiniteAbelianGroup::label_of(const std::vector<Int>& coords) const {
    std::vector<Int> c = reduce(coords);
    Int label = 0;
    for (std::size_t i = 0; i < rank(); ++i) label = label * factors[i] + c[i];
    return label;
}

std::vector<Int> FiniteAbelianGroup::element_at(Int label) const {
    std::vector<Int> c(rank());
    for (std::size_t i = rank(); i-- > 0;) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), label.get_mpz_t(), factors[i].get_mpz_t());
        c[i] = r;
        label = q;
    }
    return c;
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    IntMatrix d(a.rank() + b.rank(), a.rank() + b.rank());
    std::size_t k = 0;
    for (const auto& f : a.factors) d.at(k, k) = f, ++k;
    for (const auto& f : b.factors) d.at(k, k) = f, ++k;
    return FiniteAbelianGroup{invariant_factors(d, false)};
}

std::vector<Int> CokernelProjection::project(const std::vector<Int>& x) const {
    std::vector<Int> ux = u.mul_vec(x);
    std::vector<Int> coords;
    coords.reserve(keep.size());
    for (std::size_t i : keep) coords.push_back(ux[i]);
    return group.reduce(std::move(coords));
}

CokernelProjection cokernel(const IntMatrix& presentation) {
    if (!presentation.is_square()) fail(Errc::NotSquare, "presentation matrix must be square");
    SnfResult s = snf(presentation);
    CokernelProjection p;
    for (std::size_t i = 0; i < s.diag.size(); ++i) {
        if (s.diag[i] == 1) continue;
        if (sgn(s.diag[i]) == 0) fail(Errc::InfiniteHomology, "presentation matrix has infinite cokernel");
        p.keep.push_back(i);
        p.group.factors.push_back(s.diag[i]);
    }
    p.u = std::move(s.U);
    return p;
}

void require_prime_power(const Int& n) {
    PrimePower pp;
    if (!prime_power_decompose(n, pp))
        fail(Errc::NotPrimePower, "cover index must be a prime power, got " + n.get_str());
}

namespace {

unsigned long cover_index(const Int& n) {
    require_prime_power(n);
    if (!fits_int64(n) || to_int64(n) > (1 << 20)) fail(Errc::Internal, "cover index too large: " + n.get_str());
    return static_cast<unsigned long>(to_int64(n));
}

} // namespace

IntMatrix presentation_small(const SeifertMatrix& s, const Int& n) {
    unsigned long un = cover_index(n);
    if (s.genus() == 0) return IntMatrix(0, 0);
    IntMatrix p = monodromy(s);
    IntMatrix pmi = p - IntMatrix::identity(p.rows());
    return mat_pow(p, un) - mat_pow(pmi, un);
}

IntMatrix presentation_block(const SeifertMatrix& s, const Int& n) {
    unsigned long un = cover_index(n);
    if (s.genus() == 0) return IntMatrix(0, 0);
    IntMatrix p = monodromy(s);
    std::size_t d = p.rows();
    IntMatrix imp = IntMatrix::identity(d) - p;
    IntMatrix f(d * un, d * un);
    for (unsigned long b = 0; b < un; ++b) {
        f.set_block(b * d, b * d, p);
        f.set_block(b * d, ((b + 1) % un) * d, imp);
    }
    return f;
}

CoverPresentation cover_presentation(const SeifertMatrix& s, const Int& n) {
    CoverPresentation cp;
    cp.n = cover_index(n);
    cp.small_mat = presentation_small(s, n);
    cp.block_mat = presentation_block(s, n);
    cp.small_coker = cokernel(cp.small_mat);
    cp.block_coker = cokernel(cp.block_mat);
    return cp;
}

FiniteAbelianGroup homology(const SeifertMatrix& s, const Int& n) {
    IntMatrix p = presentation_small(s, n);
    return cokernel(p).group;
}

Int order_fox(const SeifertMatrix& s, const Int& n) {
    unsigned long un = cover_index(n);
    IntPoly delta = alexander(s).poly;
    return abs(resultant(IntPoly::tn_minus_one(un), delta));
}

SubmoduleImage submodule_image(const SeifertMatrix& s, const Metabolizer& z, const Int& n) {
    unsigned long un = cover_index(n);
    require_metabolizer(s, z);
    IntMatrix block = presentation_block(s, n);
    CokernelProjection coker = cokernel(block);
    std::size_t d = s.dim();

    // generators of the diagonal copies of Z inside Z^{2gn}, as columns
    IntMatrix gens(d * un, z.rank() * un);
    for (unsigned long b = 0; b < un; ++b)
        for (std::size_t k = 0; k < z.rank(); ++k)
            for (std::size_t i = 0; i < d; ++i) gens.at(b * d + i, b * z.rank() + k) = z.basis[k][i];

    // order as the lattice index [im(block) + gens : im(block)]
    Int full = coker.group.order();
    Int quotient = 1;
    if (!block.empty()) {
        for (const auto& f : invariant_factors(block.augment_cols(gens), false)) quotient *= f;
    }
    Int order = exact_div(full, quotient);

    // the subgroup itself: close the projected generators under addition
    std::map<Int, std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier{coker.group.zero()};
    seen[coker.group.label_of(coker.group.zero())] = coker.group.zero();
    std::vector<std::vector<Int>> proj_gens;
    for (std::size_t c = 0; c < gens.cols(); ++c) {
        std::vector<Int> col(d * un);
        for (std::size_t i = 0; i < d * un; ++i) col[i] = gens.at(i, c);
        proj_gens.push_back(coker.project(col));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& e : frontier)
            for (const auto& g : proj_gens) {
                auto sum = coker.group.add(e, g);
                Int label = coker.group.label_of(sum);
                if (seen.emplace(label, sum).second) next.push_back(std::move(sum));
            }
        frontier = std::move(next);
    }
    if (Int(static_cast<long>(seen.size())) != order)
        fail(Errc::Internal, "submodule image order mismatch: closure " + std::to_string(seen.size()) +
                                 " vs index " + order.get_str());

    SubmoduleImage img;
    img.ambient = coker.group;
    img.order = order;
    for (const auto& [label, elem] : seen) img.labels.push_back(label);
    return img;
}

} // namespace knotconc
