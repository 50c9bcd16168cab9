#ifndef KNOTCONC_RESULTANT_HPP
#define KNOTCONC_RESULTANT_HPP

#include "knotconc/int_matrix.hpp"
#include "knotconc/int_poly.hpp"

namespace knotconc {

// Sylvester matrix of (f, g): deg(g) shifted rows of f's coefficients
// (high to low) over deg(f) shifted rows of g's. Size (deg f + deg g)^2.
IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g);

// Res(f, g) = det of the Sylvester matrix = lc(f)^{deg g} * prod g(alpha)
// over the complex roots alpha of f. Inputs must be nonzero.
Int resultant(const IntPoly& f, const IntPoly& g);

// The two routes behind resultant(), exposed so they can be checked
// against each other.
Int resultant_sylvester(const IntPoly& f, const IntPoly& g);
Int resultant_subresultant(const IntPoly& f, const IntPoly& g);

} // namespace knotconc

#endif
