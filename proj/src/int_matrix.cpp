#include "knotconc/int_matrix.hpp"

#include <sstream>

namespace knotconc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) fail(Errc::Internal, "ragged matrix literal");
        for (long v : r) e_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) fail(Errc::Internal, "matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::Internal, "matrix sum shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::Internal, "matrix difference shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

std::vector<Int> IntMatrix::mul_vec(const std::vector<Int>& x) const {
    if (x.size() != cols_) fail(Errc::Internal, "matrix-vector shape mismatch");
    std::vector<Int> y(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
}

Int IntMatrix::max_abs_entry() const {
    Int m = 0;
    for (const auto& v : e_)
        if (abs(v) > m) m = abs(v);
    return m;
}

IntMatrix IntMatrix::block_diagonal(const std::vector<IntMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) fail(Errc::NotSquare, "block_diagonal wants square blocks");
        n += b.rows();
    }
    IntMatrix m(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        m.set_block(off, off, b);
        off += b.rows();
    }
    return m;
}

void IntMatrix::set_block(std::size_t i, std::size_t j, const IntMatrix& src) {
    if (i + src.rows() > rows_ || j + src.cols() > cols_) fail(Errc::Internal, "set_block out of range");
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) at(i + r, j + c) = src.at(r, c);
}

IntMatrix IntMatrix::submatrix(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols) const {
    if (i + rows > rows_ || j + cols > cols_) fail(Errc::Internal, "submatrix out of range");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = at(i + r, j + c);
    return m;
}

IntMatrix IntMatrix::augment_cols(const IntMatrix& right) const {
    if (right.rows() != rows_) fail(Errc::Internal, "augment_cols row mismatch");
    IntMatrix m(rows_, cols_ + right.cols());
    m.set_block(0, 0, *this);
    m.set_block(0, cols_, right);
    return m;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// Fraction-free Bareiss elimination over any integral domain with exact
// division. Returns the determinant.
template <typename Ring, typename IsZero, typename ExactDiv>
Ring bareiss_det(std::vector<Ring> a, std::size_t n, const Ring& one, IsZero is_zero, ExactDiv ediv) {
    if (n == 0) return one;
    auto at = [&a, n](std::size_t i, std::size_t j) -> Ring& { return a[i * n + j]; };
    Ring prev = one;
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(at(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(at(p, k))) ++p;
            if (p == n) return Ring(); // zero column: determinant vanishes
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = ediv(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
        prev = at(k, k);
    }
    Ring d = at(n - 1, n - 1);
    if (neg) d = -d;
    return d;
}

Int det_tiny(const IntMatrix& m) {
    switch (m.rows()) {
        case 0:
            return 1;
        case 1:
            return m.at(0, 0);
        case 2:
            return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        default:
            return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
                   m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                   m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    }
}

} // namespace

Int det(const IntMatrix& m) {
    if (!m.is_square()) fail(Errc::NotSquare, "determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n <= 3) return det_tiny(m);
    std::vector<Int> a;
    a.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));
    return bareiss_det<Int>(
        std::move(a), n, Int(1), [](const Int& x) { return sgn(x) == 0; },
        [](const Int& x, const Int& p) { return exact_div(x, p); });
}

IntMatrix adjugate(const IntMatrix& m) {
    if (!m.is_square()) fail(Errc::NotSquare, "adjugate of non-square matrix");
    std::size_t n = m.rows();
    IntMatrix adj(n, n);
    if (n == 0) return adj;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc) = m.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            Int cof = det(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            adj.at(i, j) = cof;
        }
    return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    Int d = det(m);
    if (d != 1 && d != -1) fail(Errc::Internal, "unimodular_inverse: determinant is " + d.get_str());
    IntMatrix inv = adjugate(m);
    if (d == -1)
        for (std::size_t i = 0; i < inv.rows(); ++i)
            for (std::size_t j = 0; j < inv.cols(); ++j) inv.at(i, j) = -inv.at(i, j);
    return inv;
}

IntMatrix mat_pow(const IntMatrix& m, unsigned long e) {
    if (!m.is_square()) fail(Errc::NotSquare, "power of non-square matrix");
    IntMatrix r = IntMatrix::identity(m.rows());
    IntMatrix b = m;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

IntMatrix row_hnf(const IntMatrix& m) {
    IntMatrix h = m;
    std::size_t rows = h.rows(), cols = h.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // euclid down column c, below row r
        while (true) {
            std::size_t piv = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (sgn(h.at(i, c)) == 0) continue;
                if (piv == rows || abs(h.at(i, c)) < abs(h.at(piv, c))) piv = i;
            }
            if (piv == rows) break;
            if (piv != r)
                for (std::size_t j = 0; j < cols; ++j) std::swap(h.at(r, j), h.at(piv, j));
            bool clear = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (sgn(h.at(i, c)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(r, j);
                if (sgn(h.at(i, c)) != 0) clear = false;
            }
            if (clear) break;
        }
        if (sgn(h.at(r, c)) == 0) continue;
        if (sgn(h.at(r, c)) < 0)
            for (std::size_t j = 0; j < cols; ++j) h.at(r, j) = -h.at(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
            if (sgn(q) == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(r, j);
        }
        ++r;
    }
    return h;
}

IntPoly det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) fail(Errc::NotSquare, "determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return IntPoly::constant(1);
    std::vector<IntPoly> a;
    a.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));
    return bareiss_det<IntPoly>(
        std::move(a), n, IntPoly::constant(1), [](const IntPoly& p) { return p.is_zero(); },
        [](const IntPoly& p, const IntPoly& q) { return p.exact_div(q); });
}

} // namespace knotconc
