#include "knotconc/resultant.hpp"

namespace knotconc {

namespace {

void require_nonzero(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) fail(Errc::ZeroPolynomial, "resultant of zero polynomial");
}

// lc(b)^{deg a - deg b + 1} * a = q * b + r with deg r < deg b; returns r.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    long mults = a.degree() - b.degree() + 1;
    IntPoly r = a;
    const Int& c = b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly s = IntPoly::monomial(r.lead(), static_cast<std::size_t>(r.degree() - b.degree()));
        r = r * c - s * b;
        --mults;
    }
    // a degree drop of more than one consumes fewer multiplications than planned
    while (mults-- > 0) r = r * c;
    return r;
}

} // namespace

IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g) {
    require_nonzero(f, g);
    std::size_t m = static_cast<std::size_t>(f.degree());
    std::size_t n = static_cast<std::size_t>(g.degree());
    IntMatrix s(m + n, m + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s.at(i, i + k) = f.coeff(m - k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s.at(n + i, i + k) = g.coeff(n - k);
    return s;
}

Int resultant_sylvester(const IntPoly& f, const IntPoly& g) {
    require_nonzero(f, g);
    if (f.degree() == 0) return pow(f.coeff(0), static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return pow(g.coeff(0), static_cast<unsigned long>(f.degree()));
    return det(sylvester_matrix(f, g));
}

// Subresultant polynomial remainder sequence. The remainders follow the
// Collins divisor rule R/(g*h^delta); the resultant itself is tracked
// through the textbook identities
//   Res(A,B) = (-1)^{degA degB} lc(B)^{degA - degR - (d+1) degB} Res(B,R),
//   Res(B, c*R) = c^{degB} Res(B, R),
// with the running factor kept as an exact rational.
Int resultant_subresultant(const IntPoly& f, const IntPoly& g) {
    require_nonzero(f, g);
    if (f.degree() == 0) return pow(f.coeff(0), static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return pow(g.coeff(0), static_cast<unsigned long>(f.degree()));

    IntPoly a = f, b = g;
    Rat factor(1);
    bool negate = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
        std::swap(a, b);
    }
    {
        Int ca = a.content(), cb = b.content();
        factor *= Rat(pow(ca, static_cast<unsigned long>(b.degree())));
        factor *= Rat(pow(cb, static_cast<unsigned long>(a.degree())));
        a = a.exact_div(ca);
        b = b.exact_div(cb);
    }

    Int gc(1), h(1);
    while (true) {
        long da = a.degree(), db = b.degree();
        long delta = da - db;
        if ((da & 1) && (db & 1)) negate = !negate;
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) return 0; // nonconstant common factor
        long dr = r.degree();
        // Res(a,b) -> Res(b,r) with the exponent bookkeeping above
        factor *= pow(Rat(b.lead()), da - dr - (delta + 1) * db);
        IntPoly next = r;
        Int divisor = gc * pow(h, static_cast<unsigned long>(delta));
        next = next.exact_div(divisor);
        factor *= Rat(pow(divisor, static_cast<unsigned long>(db)));
        a = b;
        b = next;
        gc = a.lead();
        if (delta >= 1) {
            Int hp = pow(gc, static_cast<unsigned long>(delta));
            if (delta > 1) hp = exact_div(hp, pow(h, static_cast<unsigned long>(delta - 1)));
            h = hp;
        }
        if (b.degree() == 0) {
            Rat res = factor * Rat(pow(b.coeff(0), static_cast<unsigned long>(a.degree())));
            if (res.get_den() != 1) fail(Errc::Internal, "subresultant bookkeeping left a denominator");
            Int out(res.get_num());
            return negate ? Int(-out) : out;
        }
    }
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    require_nonzero(f, g);
    if (f.degree() <= 64 && g.degree() <= 64) return resultant_sylvester(f, g);
    return resultant_subresultant(f, g);
}

} // namespace knotconc
