#ifndef KNOTCONC_INT_POLY_HPP
#define KNOTCONC_INT_POLY_HPP

#include <string>
#include <vector>

#include "knotconc/numeric.hpp"

namespace knotconc {

// Dense univariate polynomial over Z in the variable t, coefficients stored
// low-to-high with no trailing zeros. The zero polynomial is the empty
// coefficient list and has degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(const Int& c);
    static IntPoly monomial(const Int& c, std::size_t deg);
    // 1 + t + ... + t^{m-1}
    static IntPoly ones(std::size_t m);
    // t^n - 1
    static IntPoly tn_minus_one(std::size_t n);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& lead() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    // gcd of the coefficients, nonnegative; 0 for the zero polynomial
    Int content() const;
    IntPoly primitive_part() const;

    // quotient this/d, asserting the division is exact in Z[t]
    IntPoly exact_div(const IntPoly& d) const;
    IntPoly exact_div(const Int& s) const;

    IntPoly mul_tpow(std::size_t k) const;
    // order of vanishing at t = 0 (0 for the zero polynomial)
    std::size_t low_order() const;
    // divide out t^{low_order}: the Laurent-normal representative with
    // nonzero constant term
    IntPoly laurent_reduced() const;
    // t^deg * p(1/t), the coefficient reversal used by the symmetry check
    IntPoly reversed() const;

    std::string str(const std::string& var = "t") const;

  private:
    void normalize();
    std::vector<Int> c_;
};

// Dense univariate polynomial over Q, same normalization as IntPoly.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    explicit RatPoly(const IntPoly& p);
    static RatPoly constant(const Rat& c);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lead() const;

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    RatPoly monic() const; // zero stays zero
    // remainder of this modulo d (d nonzero), standard division over Q
    RatPoly rem(const RatPoly& d) const;

    std::string str(const std::string& var = "t") const;

  private:
    void normalize();
    std::vector<Rat> c_;
};

// Monic gcd over Q[t]; gcd(0,0) = 0. Divides both inputs exactly.
RatPoly poly_gcd(const RatPoly& f, const RatPoly& g);

} // namespace knotconc

#endif
