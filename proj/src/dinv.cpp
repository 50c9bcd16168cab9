#include "knotconc/dinv.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace knotconc {

Rat CorrectionTable::at_label(const Int& label) const {
    Int n = label;
    Int order = group.order();
    mpz_fdiv_r(n.get_mpz_t(), n.get_mpz_t(), order.get_mpz_t());
    return values.at(static_cast<std::size_t>(to_int64(n)));
}

CorrectionTable CorrectionTable::barred() const {
    CorrectionTable t;
    t.group = group;
    t.values.reserve(values.size());
    for (const auto& v : values) t.values.push_back(v - values.at(0));
    return t;
}

void CorrectionTable::validate() const {
    Int order = group.order();
    if (!fits_int64(order) || to_int64(order) > 1000000)
        fail(Errc::GroupTooLarge, "correction table group order " + order.get_str() + " exceeds 10^6");
    if (Int(static_cast<long>(values.size())) != order)
        fail(Errc::ParseError, "correction table must cover every group element: have " +
                                   std::to_string(values.size()) + " of " + order.get_str());
    for (Int label = 0; label < order; ++label) {
        Int conj = group.label_of(group.neg(group.element_at(label)));
        if (at_label(label) != at_label(conj))
            fail(Errc::ParseError,
                 "correction table breaks conjugation symmetry at label " + label.get_str());
    }
}

std::string CorrectionTable::to_json() const {
    nlohmann::ordered_json j;
    j["group"] = nlohmann::ordered_json::array();
    for (const auto& f : group.factors) j["group"].push_back(to_int64(f));
    j["values"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < values.size(); ++i)
        j["values"].push_back({static_cast<std::int64_t>(i), rat_str(values[i])});
    return j.dump(2) + "\n";
}

CorrectionTable CorrectionTable::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::ParseError, std::string("bad table JSON: ") + e.what());
    }
    CorrectionTable t;
    if (!j.is_object() || !j.contains("group") || !j.contains("values"))
        fail(Errc::ParseError, "table JSON needs 'group' and 'values'");
    for (const auto& f : j["group"]) {
        if (!f.is_number_integer()) fail(Errc::ParseError, "group factors must be integers");
        t.group.factors.emplace_back(f.get<std::int64_t>());
    }
    for (std::size_t i = 0; i + 1 < t.group.factors.size(); ++i)
        if (sgn(t.group.factors[i + 1] % t.group.factors[i]) != 0)
            fail(Errc::ParseError, "group factors must form a divisibility chain");
    for (const auto& f : t.group.factors)
        if (f < 2) fail(Errc::ParseError, "group factors must be >= 2");
    Int order = t.group.order();
    if (!fits_int64(order) || to_int64(order) > 1000000)
        fail(Errc::GroupTooLarge, "correction table group order exceeds 10^6");
    t.values.assign(static_cast<std::size_t>(to_int64(order)), Rat(0));
    std::vector<bool> seen(t.values.size(), false);
    for (const auto& entry : j["values"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_string())
            fail(Errc::ParseError, "table values must be [label, \"num/den\"] pairs");
        std::int64_t label = entry[0].get<std::int64_t>();
        if (label < 0 || Int(label) >= order)
            fail(Errc::ParseError, "table label " + std::to_string(label) + " out of range");
        if (seen[static_cast<std::size_t>(label)])
            fail(Errc::ParseError, "duplicate table label " + std::to_string(label));
        seen[static_cast<std::size_t>(label)] = true;
        t.values[static_cast<std::size_t>(label)] = parse_rat(entry[1].get<std::string>());
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) fail(Errc::ParseError, "table is missing label " + std::to_string(i));
    t.validate();
    return t;
}

CorrectionTable CorrectionTable::read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

LensParams LensParams::normalized(Int p, Int q) {
    if (p < 1) fail(Errc::NotCoprime, "lens space order must be >= 1");
    mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    if (p == 1) return {p, Int(0)};
    if (gcd(p, q) != 1) fail(Errc::NotCoprime, "lens parameters not coprime");
    return {p, q};
}

Rat d_twist(const Int& k, Int j) {
    if (sgn(k) < 0) fail(Errc::NegativeK, "negative twist parameter has no lens-space double cover here");
    Int n = 4 * k + 1;
    mpz_fdiv_r(j.get_mpz_t(), j.get_mpz_t(), n.get_mpz_t());
    if (j > 2 * k) j = n - j; // conjugation symmetry extends the half-range form
    Rat v = Rat(1, 4) - make_rat(j * j, 8 * k + 2);
    v += (j % 2 == 1) ? Rat(1, 4) : Rat(-1, 4);
    v.canonicalize();
    return v;
}

Rat d_lens(const Int& p, const Int& q, const Int& i) {
    LensParams lp = LensParams::normalized(p, q);
    if (lp.p == 1) return Rat(0);
    Int ii = i;
    mpz_fdiv_r(ii.get_mpz_t(), ii.get_mpz_t(), lp.p.get_mpz_t());
    Int a = 2 * ii + 1 - lp.p - lp.q;
    Rat head = make_rat(a * a - lp.p * lp.q, 4 * lp.p * lp.q);
    Int pmodq = lp.p, imodq = ii;
    mpz_fdiv_r(pmodq.get_mpz_t(), pmodq.get_mpz_t(), lp.q.get_mpz_t());
    mpz_fdiv_r(imodq.get_mpz_t(), imodq.get_mpz_t(), lp.q.get_mpz_t());
    return head - d_lens(lp.q, pmodq, imodq);
}

Alignment align(const Int& k) {
    if (sgn(k) < 0) fail(Errc::NegativeK, "alignment needs k >= 0");
    if (sgn(k) == 0) return Alignment{1, 1, 0};
    Int n = 4 * k + 1;
    std::size_t un = static_cast<std::size_t>(to_int64(n));
    std::vector<Rat> dt(un), dl(un);
    for (std::size_t j = 0; j < un; ++j) {
        dt[j] = d_twist(k, Int(static_cast<long>(j)));
        dl[j] = d_lens(n, 2, Int(static_cast<long>(j)));
    }
    for (int sign : {1, -1}) {
        Rat s(sign);
        for (std::size_t b = 0; b < un; ++b) {
            if (s * dl[b] != dt[0]) continue;
            for (std::size_t a = 1; a < un; ++a) {
                if (gcd(Int(static_cast<long>(a)), n) != 1) continue;
                bool ok = true;
                std::size_t pos = b;
                for (std::size_t j = 1; j < un && ok; ++j) {
                    pos = (pos + a) % un; // pos = (a*j + b) mod n
                    ok = (s * dl[pos] == dt[j]);
                }
                if (ok) return Alignment{sign, Int(static_cast<long>(a)), Int(static_cast<long>(b))};
            }
        }
    }
    fail(Errc::NoAlignment, "no affine relabeling matches the recursion to the closed form for k = " + k.get_str());
}

CorrectionTable d_twist_table(const Int& k) {
    if (sgn(k) < 0) fail(Errc::NegativeK, "twist table needs k >= 0");
    Int n = 4 * k + 1;
    CorrectionTable t;
    if (n > 1) t.group.factors.push_back(n);
    std::size_t un = static_cast<std::size_t>(to_int64(n));
    t.values.reserve(un);
    for (std::size_t j = 0; j < un; ++j) t.values.push_back(d_twist(k, Int(static_cast<long>(j))));
    return t;
}

CorrectionTable dbar_table(const Int& k) {
    CorrectionTable raw = d_twist_table(k);
    if (sgn(raw.values.at(0)) != 0)
        fail(Errc::Internal, "basepoint correction term expected to vanish");
    return raw.barred();
}

} // namespace knotconc
