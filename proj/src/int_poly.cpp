#include "knotconc/int_poly.hpp"

#include <sstream>

namespace knotconc {

void IntPoly::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const Int& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t deg) {
    std::vector<Int> v(deg + 1, Int(0));
    v[deg] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::ones(std::size_t m) { return IntPoly(std::vector<Int>(m, Int(1))); }

IntPoly IntPoly::tn_minus_one(std::size_t n) {
    std::vector<Int> v(n + 1, Int(0));
    v[0] = -1;
    v[n] = 1;
    return IntPoly(std::move(v));
}

const Int& IntPoly::lead() const {
    if (c_.empty()) fail(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return IntPoly(std::move(v));
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
    return r;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& c : c_) g = gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    Int g = content();
    if (sgn(g) == 0) return {};
    return exact_div(g);
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
    if (d.is_zero()) fail(Errc::ZeroPolynomial, "polynomial division by zero");
    if (is_zero()) return {};
    long dq = degree() - d.degree();
    if (dq < 0) fail(Errc::Internal, "exact_div: degree of divisor exceeds dividend");
    std::vector<Int> rem = c_;
    std::vector<Int> q(static_cast<std::size_t>(dq) + 1, Int(0));
    for (long k = dq; k >= 0; --k) {
        const Int& top = rem[static_cast<std::size_t>(k + d.degree())];
        if (sgn(top) == 0) continue;
        Int qc = knotconc::exact_div(top, d.lead());
        q[static_cast<std::size_t>(k)] = qc;
        for (long i = 0; i <= d.degree(); ++i)
            rem[static_cast<std::size_t>(k + i)] -= qc * d.coeff(static_cast<std::size_t>(i));
    }
    for (const auto& c : rem)
        if (sgn(c) != 0) fail(Errc::Internal, "exact_div: nonzero polynomial remainder");
    return IntPoly(std::move(q));
}

IntPoly IntPoly::exact_div(const Int& s) const {
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = knotconc::exact_div(c_[i], s);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::mul_tpow(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Int> v(k, Int(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPoly(std::move(v));
}

std::size_t IntPoly::low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return i;
    return 0;
}

IntPoly IntPoly::laurent_reduced() const {
    std::size_t v = low_order();
    return IntPoly(std::vector<Int>(c_.begin() + static_cast<long>(v), c_.end()));
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

namespace {

template <typename Coeff>
std::string poly_str(const std::vector<Coeff>& c, const std::string& var,
                     const std::string (*coeff_str)(const Coeff&)) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0) continue;
        std::string cs = coeff_str(c[i]);
        bool neg = cs.size() && cs[0] == '-';
        if (first) {
            os << (neg ? "-" : "");
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

const std::string int_coeff_str(const Int& c) { return c.get_str(); }
const std::string rat_coeff_str(const Rat& c) { return rat_str(c); }

} // namespace

std::string IntPoly::str(const std::string& var) const { return poly_str<Int>(c_, var, &int_coeff_str); }

void RatPoly::normalize() {
    for (auto& c : c_) c.canonicalize();
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) c_.emplace_back(c);
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly({c}); }

const Rat& RatPoly::lead() const {
    if (c_.empty()) fail(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    std::vector<Rat> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return {};
    Rat inv = Rat(1) / lead();
    return *this * inv;
}

RatPoly RatPoly::rem(const RatPoly& d) const {
    if (d.is_zero()) fail(Errc::ZeroPolynomial, "polynomial division by zero");
    std::vector<Rat> r = c_;
    auto deg = [&r]() {
        long k = static_cast<long>(r.size()) - 1;
        while (k >= 0 && sgn(r[static_cast<std::size_t>(k)]) == 0) --k;
        return k;
    };
    long dd = d.degree();
    for (long k = deg(); k >= dd; k = deg()) {
        Rat q = r[static_cast<std::size_t>(k)] / d.lead();
        for (long i = 0; i <= dd; ++i)
            r[static_cast<std::size_t>(k - dd + i)] -= q * d.coeff(static_cast<std::size_t>(i));
        r[static_cast<std::size_t>(k)] = 0;
    }
    return RatPoly(std::move(r));
}

std::string RatPoly::str(const std::string& var) const { return poly_str<Rat>(c_, var, &rat_coeff_str); }

RatPoly poly_gcd(const RatPoly& f, const RatPoly& g) {
    RatPoly a = f, b = g;
    while (!b.is_zero()) {
        RatPoly r = a.rem(b);
        a = b;
        b = r;
    }
    return a.monic();
}

} // namespace knotconc
