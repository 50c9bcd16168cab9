#include "knotconc/obstruct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "knotconc/resultant.hpp"

namespace knotconc {

namespace {

// odometer over vectors in [-bound, bound]^dim, last coordinate fastest
bool next_vector(std::vector<Int>& v, const Int& bound) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] < bound) {
            ++v[i];
            for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = -bound;
            return true;
        }
    }
    return false;
}

bool is_primitive(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g == 1;
}

bool sign_normalized(const std::vector<Int>& v) {
    for (const auto& x : v) {
        if (sgn(x) > 0) return true;
        if (sgn(x) < 0) return false;
    }
    return false; // zero vector
}

bool partial_summand(const std::vector<std::vector<Int>>& basis) {
    IntMatrix m(basis.size(), basis.empty() ? 0 : basis[0].size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis[i].size(); ++j) m.at(i, j) = basis[i][j];
    for (const auto& d : snf(m).diag)
        if (d != 1) return false;
    return true;
}

void search_bases(const SeifertMatrix& s, const std::vector<std::vector<Int>>& candidates,
                  std::vector<std::vector<Int>>& partial, std::size_t next_index,
                  std::set<std::string>& seen, std::vector<Metabolizer>& out) {
    std::size_t g = s.genus();
    if (partial.size() == g) {
        Metabolizer z{partial};
        if (!is_metabolizer(s, z)) return;
        std::string key = z.canonical_basis().str();
        if (seen.insert(key).second) out.push_back(std::move(z));
        return;
    }
    for (std::size_t i = next_index; i < candidates.size(); ++i) {
        const auto& v = candidates[i];
        bool compatible = true;
        for (const auto& u : partial)
            if (sgn(s.form(u, v)) != 0 || sgn(s.form(v, u)) != 0) {
                compatible = false;
                break;
            }
        if (!compatible) continue;
        partial.push_back(v);
        if (partial_summand(partial)) search_bases(s, candidates, partial, i + 1, seen, out);
        partial.pop_back();
    }
}

} // namespace

std::vector<Metabolizer> metabolizer_search(const SeifertMatrix& s, const Int& bound) {
    std::vector<Metabolizer> out;
    if (s.genus() == 0) {
        out.push_back(Metabolizer{});
        return out;
    }
    if (sgn(bound) < 0) return out;
    std::size_t d = s.dim();
    std::vector<std::vector<Int>> candidates;
    std::vector<Int> v(d, -bound);
    do {
        if (!sign_normalized(v)) continue; // one representative per +-v pair
        if (!is_primitive(v)) continue;
        if (sgn(s.form(v, v)) != 0) continue;
        candidates.push_back(v);
    } while (next_vector(v, bound));
    std::vector<std::vector<Int>> partial;
    std::set<std::string> seen;
    search_bases(s, candidates, partial, 0, seen, out);
    return out;
}

namespace {

// integer kernel of K x = 0: columns of V of the Smith form that hit zero
// diagonal entries; unimodularity of V makes the kernel basis saturated
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& k) {
    SnfResult f = snf(k);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = 0; j < k.cols(); ++j) {
        bool zero_diag = j >= f.diag.size() || sgn(f.diag[j]) == 0;
        if (!zero_diag) continue;
        std::vector<Int> col(k.cols());
        for (std::size_t i = 0; i < k.cols(); ++i) col[i] = f.V.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

Metabolizer intersect_with_summand(const Metabolizer& z, std::size_t offset, std::size_t width) {
    IntMatrix b = z.basis_matrix();
    std::size_t total = b.cols();
    // combinations c of basis rows whose coordinates outside the window vanish
    IntMatrix outside(total - width, z.rank());
    std::size_t r = 0;
    for (std::size_t j = 0; j < total; ++j) {
        if (j >= offset && j < offset + width) continue;
        for (std::size_t i = 0; i < z.rank(); ++i) outside.at(r, i) = b.at(i, j);
        ++r;
    }
    Metabolizer part;
    for (const auto& c : integer_kernel(outside)) {
        std::vector<Int> full(total, Int(0));
        for (std::size_t i = 0; i < z.rank(); ++i)
            for (std::size_t j = 0; j < total; ++j) full[j] += c[i] * b.at(i, j);
        for (std::size_t j = 0; j < total; ++j)
            if ((j < offset || j >= offset + width) && sgn(full[j]) != 0)
                fail(Errc::Internal, "lattice intersection left the summand");
        part.basis.emplace_back(full.begin() + static_cast<long>(offset),
                                full.begin() + static_cast<long>(offset + width));
    }
    return part;
}

} // namespace

std::pair<Metabolizer, Metabolizer> split_metabolizer(const SeifertMatrix& s1, const SeifertMatrix& s2,
                                                      const Metabolizer& z) {
    if (!alexander_coprime(s1, s2))
        fail(Errc::HypothesisViolation, "Alexander polynomials are not relatively prime");
    if (!is_nonsingular(s1) && !is_nonsingular(s2))
        fail(Errc::HypothesisViolation, "both Seifert forms are singular");
    SeifertMatrix sum = block_sum({{s1, 1}, {s2, 1}});
    require_metabolizer(sum, z);
    Metabolizer z1 = intersect_with_summand(z, 0, s1.dim());
    Metabolizer z2 = intersect_with_summand(z, s1.dim(), s2.dim());
    require_metabolizer(s1, z1);
    require_metabolizer(s2, z2);
    return {std::move(z1), std::move(z2)};
}

SubgroupFamily order_p_subgroups(const FiniteAbelianGroup& e, const Int& p) {
    if (!is_prime(p)) fail(Errc::Internal, "order_p_subgroups wants a prime, got " + p.get_str());
    Int order = e.order();
    if (!fits_int64(order) || to_int64(order) > 1000000)
        fail(Errc::GroupTooLarge, "group order " + order.get_str() + " exceeds the enumeration bound 10^6");

    // the p-torsion subgroup is elementary abelian of rank = #{i : p | d_i}
    std::vector<std::size_t> tor_coords;
    for (std::size_t i = 0; i < e.rank(); ++i)
        if (sgn(e.factors[i] % p) == 0) tor_coords.push_back(i);
    std::size_t r = tor_coords.size();

    SubgroupFamily fam;
    fam.p = p;
    if (r == 0) return fam;

    // enumerate nonzero p-torsion elements; each order-p subgroup shows up
    // once via its smallest nonzero element
    std::vector<Int> steps(r);
    for (std::size_t i = 0; i < r; ++i) steps[i] = exact_div(e.factors[tor_coords[i]], p);
    std::vector<Int> digit(r, Int(0));
    std::map<Int, std::vector<Int>> found; // min nonzero label -> sorted labels
    while (true) {
        // advance odometer over digits in [0, p)
        std::size_t i = r;
        while (i-- > 0) {
            if (digit[i] + 1 < p) {
                ++digit[i];
                break;
            }
            digit[i] = 0;
            if (i == 0) goto done;
        }
        {
            std::vector<Int> x = e.zero();
            for (std::size_t t = 0; t < r; ++t) x[tor_coords[t]] = digit[t] * steps[t];
            std::vector<Int> labels;
            std::vector<Int> cur = e.zero();
            for (Int c = 0; c < p; ++c) {
                labels.push_back(e.label_of(cur));
                cur = e.add(cur, x);
            }
            std::sort(labels.begin(), labels.end());
            Int key = labels.size() > 1 ? labels[1] : Int(0); // smallest nonzero
            found.emplace(key, labels);
        }
    }
done:
    for (auto& [key, labels] : found) fam.subgroups.push_back(std::move(labels));
    // sanity: (p^r - 1)/(p - 1) lines
    Int expect = exact_div(pow(p, static_cast<unsigned long>(r)) - 1, p - 1);
    if (Int(static_cast<long>(fam.subgroups.size())) != expect)
        fail(Errc::Internal, "order-p subgroup count mismatch");
    return fam;
}

SubgroupFamily subgroup_sums(const CorrectionTable& table, const Int& p) {
    SubgroupFamily fam = order_p_subgroups(table.group, p);
    fam.sums.reserve(fam.subgroups.size());
    for (const auto& h : fam.subgroups) {
        Rat s(0);
        for (const auto& label : h) s += table.at_label(label);
        fam.sums.push_back(s);
    }
    return fam;
}

ObstructionValue min_nonneg_combination(const std::vector<Rat>& sums) {
    if (sums.empty()) fail(Errc::Internal, "min_nonneg_combination of empty list");
    std::vector<Int> coeff(sums.size(), Int(0));
    for (std::size_t i = 0; i < sums.size(); ++i)
        if (sgn(sums[i]) == 0) {
            coeff[i] = 1;
            return {Rat(0), coeff};
        }
    std::size_t pos = sums.size(), neg = sums.size();
    for (std::size_t i = 0; i < sums.size(); ++i) {
        if (sgn(sums[i]) > 0 && pos == sums.size()) pos = i;
        if (sgn(sums[i]) < 0 && neg == sums.size()) neg = i;
    }
    if (pos != sums.size() && neg != sums.size()) {
        // a positive and a negative sum cancel exactly
        coeff[pos] = Int(-sums[neg].get_num()) * sums[pos].get_den();
        coeff[neg] = Int(sums[pos].get_num()) * sums[neg].get_den();
        return {Rat(0), coeff};
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < sums.size(); ++i)
        if (abs(sums[i]) < abs(sums[best])) best = i;
    coeff[best] = 1;
    return {abs(sums[best]), coeff};
}

ObstructionValue d_obstruction(const CorrectionTable& table, const Int& p) {
    if (!is_prime(p)) fail(Errc::Internal, "d_obstruction wants a prime, got " + p.get_str());
    if (sgn(table.group.order() % p) != 0) return {Rat(0), {}};
    SubgroupFamily fam = subgroup_sums(table, p);
    return min_nonneg_combination(fam.sums);
}

PrimeSet cover_order_prime_set(const SeifertMatrix& s, const Int& p, const Int& qmax, const Int& rmax) {
    if (!is_prime(p)) fail(Errc::Internal, "prime set search wants a prime, got " + p.get_str());
    if (qmax < 1 || rmax < 1) fail(Errc::Internal, "prime set search bounds must be >= 1");
    PrimeSet out{p, {}, qmax, rmax};
    for (const Int& q : primes_up_to(qmax)) {
        Int n = q;
        for (Int r = 1; r <= rmax; ++r, n *= q) {
            if (sgn(order_fox(s, n) % p) == 0) {
                out.members.push_back(q);
                break;
            }
        }
    }
    return out;
}

IntMatrix ones_sylvester_matrix(unsigned long m, unsigned long n) {
    if (m < 2 || n < 2) fail(Errc::Internal, "ones_sylvester_matrix wants m, n >= 2");
    return sylvester_matrix(IntPoly::ones(m), IntPoly::ones(n));
}

Int ones_sylvester_det(unsigned long m, unsigned long n) {
    Int d = det(ones_sylvester_matrix(m, n));
    Int r = resultant_subresultant(IntPoly::ones(m), IntPoly::ones(n));
    if (d != r)
        fail(Errc::Internal, "determinant route " + d.get_str() + " disagrees with resultant route " + r.get_str());
    return d;
}

AlgClass twist_alg_class(const Int& k) {
    if (sgn(k) < 0) return AlgClass::InfiniteOrder;
    if (is_perfect_square(4 * k + 1)) return AlgClass::AlgebraicallySlice;
    return AlgClass::FiniteOrder;
}

std::string alg_class_str(AlgClass c) {
    switch (c) {
        case AlgClass::InfiniteOrder:
            return "infinite-order";
        case AlgClass::AlgebraicallySlice:
            return "algebraically-slice";
        default:
            return "finite-order";
    }
}

namespace {

std::vector<Int> subgroup_closure(const FiniteAbelianGroup& e, const std::vector<std::vector<Int>>& gens) {
    std::map<Int, std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier{e.zero()};
    seen[e.label_of(e.zero())] = e.zero();
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto sum = e.add(x, g);
                Int label = e.label_of(sum);
                if (seen.emplace(label, sum).second) next.push_back(std::move(sum));
            }
        frontier = std::move(next);
    }
    std::vector<Int> labels;
    labels.reserve(seen.size());
    for (const auto& [label, elem] : seen) labels.push_back(label);
    return labels;
}

} // namespace

std::vector<std::vector<Int>> subgroups_of_order(const FiniteAbelianGroup& e, const Int& order) {
    Int n = e.order();
    if (sgn(order) <= 0 || sgn(n % order) != 0) return {};
    if (order == 1) return {{Int(0)}};
    if (e.rank() <= 1) {
        // cyclic: one subgroup per divisor, the multiples of n/order
        Int step = exact_div(n, order);
        std::vector<Int> labels;
        for (Int x = 0; x < n; x += step) labels.push_back(x);
        return {labels};
    }
    if (!fits_int64(n) || to_int64(n) > 4096)
        fail(Errc::GroupTooLarge, "subgroup enumeration bound exceeded for order " + n.get_str());
    // lattice walk: grow subgroups by adjoining elements, keep orders dividing
    // the target
    std::set<std::vector<Int>> visited;
    std::vector<std::vector<Int>> out;
    std::vector<std::vector<std::vector<Int>>> work; // each entry: generator list
    work.push_back({});
    visited.insert({Int(0)});
    std::vector<std::vector<Int>> all_elems;
    for (Int label = 0; label < n; ++label) all_elems.push_back(e.element_at(label));
    std::vector<std::pair<std::vector<Int>, std::vector<std::vector<Int>>>> frontier; // labels, gens
    frontier.push_back({{Int(0)}, {}});
    while (!frontier.empty()) {
        auto [labels, gens] = frontier.back();
        frontier.pop_back();
        if (Int(static_cast<long>(labels.size())) == order) {
            out.push_back(labels);
            continue;
        }
        for (const auto& x : all_elems) {
            Int xl = e.label_of(x);
            if (std::binary_search(labels.begin(), labels.end(), xl)) continue;
            auto gens2 = gens;
            gens2.push_back(x);
            std::vector<Int> closure = subgroup_closure(e, gens2);
            std::sort(closure.begin(), closure.end());
            if (Int(static_cast<long>(closure.size())) > order) continue;
            if (sgn(order % Int(static_cast<long>(closure.size()))) != 0) continue;
            if (!visited.insert(closure).second) continue;
            frontier.push_back({std::move(closure), std::move(gens2)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Verdict slice_obstruction_verdict(const SeifertMatrix& s, const Int& n, const CorrectionTable& table) {
    FiniteAbelianGroup h1 = homology(s, n);
    if (!(h1 == table.group))
        fail(Errc::MissingTable, "correction table group does not match the cover homology (order " +
                                     table.group.order().get_str() + " vs " + h1.order().get_str() + ")");
    Verdict v;
    v.h1_order = h1.order();
    if (!is_perfect_square(v.h1_order)) {
        v.kind = VerdictKind::NoSquareOrderSubgroup;
        v.root = 0;
        return v;
    }
    v.root = isqrt(v.h1_order);
    CorrectionTable dbar = table.barred();
    auto subs = subgroups_of_order(table.group, v.root);
    if (subs.empty()) {
        v.kind = VerdictKind::NoSquareOrderSubgroup;
        return v;
    }
    for (const auto& labels : subs) {
        SubgroupEvidence ev;
        ev.labels = labels;
        ev.vanishes = true;
        for (const auto& label : labels) {
            ev.dbar.push_back(dbar.at_label(label));
            if (sgn(ev.dbar.back()) != 0) ev.vanishes = false;
        }
        v.evidence.push_back(std::move(ev));
    }
    for (const auto& ev : v.evidence)
        if (ev.vanishes) {
            v.kind = VerdictKind::Passes;
            v.witness = ev.labels;
            return v;
        }
    v.kind = VerdictKind::NoVanishingSubgroup;
    return v;
}

Verdict slice_obstruction_verdict_twist(const Int& k) {
    if (sgn(k) < 0) fail(Errc::NegativeK, "no auto table for negative twists");
    IntMatrix a(2, 2);
    a.at(0, 0) = -1;
    a.at(0, 1) = 1;
    a.at(1, 1) = k;
    return slice_obstruction_verdict(SeifertMatrix::validate(a), 2, dbar_table(k));
}

std::vector<TwistReportRow> twist_report(const Int& kmax) {
    if (kmax < 1) fail(Errc::Internal, "twist_report wants kmax >= 1");
    std::vector<TwistReportRow> rows;
    for (Int k = 1; k <= kmax; ++k) {
        CorrectionTable dbar = dbar_table(k);
        AlgClass cls = twist_alg_class(k);
        for (const Int& p : prime_divisors(4 * k + 1)) {
            Rat val = d_obstruction(dbar, p).value;
            if (k <= 2 && sgn(val) != 0)
                fail(Errc::Internal, "expected vanishing obstruction for k = " + k.get_str());
            if (k >= 3 && sgn(val) == 0)
                fail(Errc::Internal, "expected positive obstruction for k = " + k.get_str() +
                                         ", p = " + p.get_str());
            rows.push_back({k, p, val, cls});
        }
    }
    return rows;
}

} // namespace knotconc
