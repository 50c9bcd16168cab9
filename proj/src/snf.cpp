#include "knotconc/snf.hpp"

namespace knotconc {

IntMatrix SnfResult::diag_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d.at(i, i) = diag[i];
    return d;
}

Int SnfResult::nonzero_product() const {
    Int p = 1;
    for (const auto& d : diag)
        if (sgn(d) != 0) p *= d;
    return p;
}

bool SnfResult::has_zero() const {
    for (const auto& d : diag)
        if (sgn(d) == 0) return true;
    return false;
}

namespace {

struct Worker {
    IntMatrix m, u, v;
    std::size_t rows, cols;

    explicit Worker(const IntMatrix& in)
        : m(in), u(IntMatrix::identity(in.rows())), v(IntMatrix::identity(in.cols())),
          rows(in.rows()), cols(in.cols()) {}

    // every mutation below keeps u * input * v == m

    void row_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void col_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    void row_add(std::size_t dst, std::size_t src, const Int& q) { // row dst += q * row src
        if (sgn(q) == 0) return;
        for (std::size_t j = 0; j < cols; ++j) m.at(dst, j) += q * m.at(src, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(dst, j) += q * u.at(src, j);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& q) { // col dst += q * col src
        if (sgn(q) == 0) return;
        for (std::size_t i = 0; i < rows; ++i) m.at(i, dst) += q * m.at(i, src);
        for (std::size_t i = 0; i < cols; ++i) v.at(i, dst) += q * v.at(i, src);
    }
    void row_negate(std::size_t a) {
        for (std::size_t j = 0; j < cols; ++j) m.at(a, j) = -m.at(a, j);
        for (std::size_t j = 0; j < rows; ++j) u.at(a, j) = -u.at(a, j);
    }

    // smallest nonzero |entry| in the submatrix at (t, t), first hit in
    // row-major order; keeps the whole reduction reproducible
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Int& e = m.at(i, j);
                if (sgn(e) == 0) continue;
                if (!found || abs(e) < best) {
                    best = abs(e);
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    void clear_cross(std::size_t t) {
        while (true) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) return;
            row_swap(t, pi);
            col_swap(t, pj);
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(m.at(i, t)) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
                row_add(i, t, -q);
                if (sgn(m.at(i, t)) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(m.at(t, j)) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
                col_add(j, t, -q);
                if (sgn(m.at(t, j)) != 0) dirty = true;
            }
            if (dirty) continue; // leftover remainders are smaller than the pivot: rescan
            // pivot must divide the rest of the submatrix
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                    if (sgn(m.at(i, j) % m.at(t, t)) != 0) {
                        row_add(t, i, Int(1));
                        fixed = true;
                    }
            if (!fixed) return;
        }
    }

    // replace diag (a, b) at positions (i, j), i < j, by (gcd, lcm signed)
    void couple_diagonal(std::size_t i, std::size_t j) {
        // bring b into row i, then redo the local reduction
        row_add(i, j, Int(1)); // m(i,i)=a, m(i,j)=b
        Int a = m.at(i, i), b = m.at(i, j);
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        // col i <- s*col i + t*col j, col j <- -(b/g)*col i + (a/g)*col j
        apply_col_pair(i, j, s, t, -exact_div(b, g), exact_div(a, g));
        // now m(i,i)=g, m(i,j)=0, m(j,i) may be nonzero: clear with a row op
        if (sgn(m.at(j, i)) != 0) {
            Int q = exact_div(m.at(j, i), m.at(i, i));
            row_add(j, i, -q);
        }
    }

    // [col_i col_j] <- [col_i col_j] * [[p, r], [q, s]] with ps - qr = +-1
    void apply_col_pair(std::size_t ci, std::size_t cj, const Int& p, const Int& q, const Int& r, const Int& s) {
        for (std::size_t i = 0; i < rows; ++i) {
            Int a = m.at(i, ci), b = m.at(i, cj);
            m.at(i, ci) = a * p + b * q;
            m.at(i, cj) = a * r + b * s;
        }
        for (std::size_t i = 0; i < cols; ++i) {
            Int a = v.at(i, ci), b = v.at(i, cj);
            v.at(i, ci) = a * p + b * q;
            v.at(i, cj) = a * r + b * s;
        }
    }
};

} // namespace

SnfResult snf(const IntMatrix& in) {
    Worker w(in);
    std::size_t n = std::min(w.rows, w.cols);
    for (std::size_t t = 0; t < n; ++t) w.clear_cross(t);
    for (std::size_t t = 0; t < n; ++t)
        if (sgn(w.m.at(t, t)) < 0) w.row_negate(t);
    // push zero diagonal entries past nonzero ones
    for (std::size_t t = 0; t < n; ++t) {
        if (sgn(w.m.at(t, t)) != 0) continue;
        for (std::size_t s = t + 1; s < n; ++s)
            if (sgn(w.m.at(s, s)) != 0) {
                w.row_swap(t, s);
                w.col_swap(t, s);
                break;
            }
    }
    // enforce the divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t + 1 < n; ++t) {
            const Int& a = w.m.at(t, t);
            const Int& b = w.m.at(t + 1, t + 1);
            if (sgn(a) == 0) {
                if (sgn(b) != 0) { // zero before nonzero: swap
                    w.row_swap(t, t + 1);
                    w.col_swap(t, t + 1);
                    changed = true;
                }
                continue;
            }
            if (sgn(b % a) != 0) {
                w.couple_diagonal(t, t + 1);
                if (sgn(w.m.at(t, t)) < 0) w.row_negate(t);
                if (sgn(w.m.at(t + 1, t + 1)) < 0) w.row_negate(t + 1);
                changed = true;
            }
        }
    }
    SnfResult r;
    r.diag.reserve(n);
    for (std::size_t t = 0; t < n; ++t) r.diag.push_back(w.m.at(t, t));
    r.U = std::move(w.u);
    r.V = std::move(w.v);
    return r;
}

std::vector<Int> invariant_factors(const IntMatrix& m, bool allow_zero) {
    SnfResult s = snf(m);
    std::vector<Int> f;
    for (const auto& d : s.diag) {
        if (d == 1) continue;
        if (sgn(d) == 0 && !allow_zero)
            fail(Errc::InfiniteHomology, "presentation matrix has infinite cokernel");
        f.push_back(d);
    }
    return f;
}

} // namespace knotconc
