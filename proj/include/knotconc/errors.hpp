#ifndef KNOTCONC_ERRORS_HPP
#define KNOTCONC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotconc {

// One exception type for the whole library; the code tells callers (and
// tests) which contract was violated.
enum class Errc {
    NotSquare,
    ZeroPolynomial,
    OddDimension,
    NotUnimodularIntersection,
    EmptyMatrix,
    ZeroMultiplicity,
    NotPrimePower,
    InfiniteHomology,
    NegativeK,
    NotCoprime,
    NoAlignment,
    GroupTooLarge,
    NotMetabolizer,
    HypothesisViolation,
    MissingTable,
    ParseError,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace knotconc

#endif
