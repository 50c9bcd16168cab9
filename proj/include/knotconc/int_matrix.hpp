#ifndef KNOTCONC_INT_MATRIX_HPP
#define KNOTCONC_INT_MATRIX_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "knotconc/int_poly.hpp"
#include "knotconc/numeric.hpp"

namespace knotconc {

// Dense matrix over Z, row-major. Entries are arbitrary-precision: Fox
// orders and iterated presentation matrices overflow any fixed width.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    std::vector<Int> mul_vec(const std::vector<Int>& x) const;

    Int max_abs_entry() const; // 0 for empty

    // square blocks stacked along the diagonal
    static IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);
    // copy src into this with top-left corner at (i, j)
    void set_block(std::size_t i, std::size_t j, const IntMatrix& src);
    IntMatrix submatrix(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols) const;
    // horizontal concatenation [this | right]
    IntMatrix augment_cols(const IntMatrix& right) const;

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// Exact determinant. Cofactor expansion for n <= 3, fraction-free Bareiss
// elimination above (every intermediate value is a minor of the input).
Int det(const IntMatrix& m);

// adj(M) with M * adj(M) = det(M) * I; the exact inverse of a matrix with
// determinant +-1.
IntMatrix adjugate(const IntMatrix& m);

// Inverse of a matrix with det = +-1; throws otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

IntMatrix mat_pow(const IntMatrix& m, unsigned long e);

// Row-style Hermite normal form of a full-row-rank matrix: canonical basis
// of the row lattice (pivots positive, entries above a pivot reduced into
// [0, pivot)). Used to compare sublattices by equality.
IntMatrix row_hnf(const IntMatrix& m);

// Matrix over Z[t]; only what the Alexander determinant needs.
class PolyMatrix {
  public:
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    IntPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const IntPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  private:
    std::size_t rows_, cols_;
    std::vector<IntPoly> e_;
};

// Exact determinant over Z[t] (Bareiss; exact polynomial divisions).
IntPoly det(const PolyMatrix& m);

} // namespace knotconc

#endif
