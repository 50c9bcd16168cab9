#include "knotconc/numeric.hpp"

#include <limits>

namespace knotconc {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int exact_div(const Int& a, const Int& b) {
    if (sgn(b) == 0) fail(Errc::Internal, "exact_div: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) fail(Errc::Internal, "exact_div: " + a.get_str() + " not divisible by " + b.get_str());
    return q;
}

Int pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat pow(const Rat& base, long exp) {
    if (exp >= 0) {
        Rat r(pow(base.get_num(), static_cast<unsigned long>(exp)),
              pow(base.get_den(), static_cast<unsigned long>(exp)));
        r.canonicalize();
        return r;
    }
    if (sgn(base) == 0) fail(Errc::Internal, "pow: zero to negative power");
    Rat r(pow(base.get_den(), static_cast<unsigned long>(-exp)),
          pow(base.get_num(), static_cast<unsigned long>(-exp)));
    r.canonicalize();
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) fail(Errc::Internal, "make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || sgn(Int(r.get_den())) == 0)
        fail(Errc::ParseError, "bad rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

bool fits_int64(const Int& a) {
    static const Int lo(std::numeric_limits<std::int64_t>::min());
    static const Int hi(std::numeric_limits<std::int64_t>::max());
    return a >= lo && a <= hi;
}

std::int64_t to_int64(const Int& a) {
    if (!fits_int64(a)) fail(Errc::Internal, "integer out of int64 range: " + a.get_str());
    if (mpz_fits_slong_p(a.get_mpz_t())) return static_cast<std::int64_t>(mpz_get_si(a.get_mpz_t()));
    // 32-bit long fallback; not hit on this platform.
    return static_cast<std::int64_t>(a.get_str() == "" ? 0 : std::stoll(a.get_str()));
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool prime_power_decompose(const Int& n, PrimePower& out) {
    if (n < 2) return false;
    Int q = 0;
    Int m = n;
    // smallest prime factor by trial division; big prime leftovers handled below
    for (Int d = 2; d * d <= m && d < 1000000; ++d) {
        if (m % d == 0) {
            q = d;
            break;
        }
    }
    if (q == 0) {
        if (!is_prime(m)) return false;
        out = {m, 1};
        return true;
    }
    unsigned long r = 0;
    while (m % q == 0) {
        m /= q;
        ++r;
    }
    if (m != 1) return false;
    out = {q, r};
    return true;
}

std::vector<Int> prime_divisors(Int n) {
    std::vector<Int> ps;
    if (n < 0) n = -n;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n >= 2) ps.push_back(n);
    return ps;
}

std::vector<Int> primes_up_to(const Int& bound) {
    std::vector<Int> ps;
    for (Int p = 2; p <= bound; ++p)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

bool is_perfect_square(const Int& n) {
    if (sgn(n) < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int isqrt(const Int& n) {
    if (sgn(n) < 0) fail(Errc::Internal, "isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

} // namespace knotconc
