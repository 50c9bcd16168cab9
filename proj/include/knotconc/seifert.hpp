#ifndef KNOTCONC_SEIFERT_HPP
#define KNOTCONC_SEIFERT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "knotconc/int_matrix.hpp"
#include "knotconc/int_poly.hpp"

namespace knotconc {

// A validated Seifert matrix: square, even dimension 2g, and with
// unimodular antisymmetrization det(A^t - A) = +1. The 0x0 matrix (the
// unknot) is valid with g = 0.
class SeifertMatrix {
  public:
    static SeifertMatrix validate(const IntMatrix& a);

    const IntMatrix& matrix() const { return a_; }
    std::size_t genus() const { return a_.rows() / 2; }
    std::size_t dim() const { return a_.rows(); }

    // theta(x, y) = x^t A y
    Int form(const std::vector<Int>& x, const std::vector<Int>& y) const;

    bool operator==(const SeifertMatrix& o) const { return a_ == o.a_; }

  private:
    explicit SeifertMatrix(IntMatrix a) : a_(std::move(a)) {}
    IntMatrix a_;
};

struct AlexanderPoly {
    IntPoly poly; // det(A - t A^t); degree <= 2g, poly(1) = +-1
};

// det(A - t A^t), exact over Z[t].
AlexanderPoly alexander(const SeifertMatrix& s);

// (A^t - A)^{-1} A^t, integral because det(A^t - A) = 1. Throws EmptyMatrix
// for genus 0.
IntMatrix monodromy(const SeifertMatrix& s);

// Block-diagonal sum; each part repeated multiplicity (>= 1) times.
SeifertMatrix block_sum(const std::vector<std::pair<SeifertMatrix, unsigned long>>& parts);

// gcd of the Alexander polynomials constant in Q[t, 1/t] (powers of t are
// units and get normalized away first).
bool alexander_coprime(const SeifertMatrix& s1, const SeifertMatrix& s2);

// det(A) != 0; vacuously true for the 0x0 matrix.
bool is_nonsingular(const SeifertMatrix& s);

// Text format: '#'-prefixed comment lines ignored, other lines are
// whitespace-separated integer rows of a square even-dimensional matrix.
SeifertMatrix parse_seifert(const std::string& text);
std::string emit_seifert(const SeifertMatrix& s, const std::string& comment = "");
SeifertMatrix read_seifert_file(const std::string& path);

} // namespace knotconc

#endif
