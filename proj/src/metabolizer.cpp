#include "knotconc/metabolizer.hpp"

#include "knotconc/snf.hpp"

namespace knotconc {

IntMatrix Metabolizer::basis_matrix() const {
    std::size_t cols = basis.empty() ? 0 : basis[0].size();
    IntMatrix m(basis.size(), cols);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].size() != cols) fail(Errc::Internal, "ragged metabolizer basis");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = basis[i][j];
    }
    return m;
}

IntMatrix Metabolizer::canonical_basis() const { return row_hnf(basis_matrix()); }

bool Metabolizer::same_span(const Metabolizer& o) const {
    return rank() == o.rank() && canonical_basis() == o.canonical_basis();
}

namespace {

std::string check(const SeifertMatrix& s, const Metabolizer& z) {
    std::size_t g = s.genus();
    if (z.rank() != g) return "basis has rank " + std::to_string(z.rank()) + ", expected genus " + std::to_string(g);
    for (const auto& v : z.basis)
        if (v.size() != s.dim()) return "basis vector length mismatch";
    for (std::size_t i = 0; i < z.rank(); ++i)
        for (std::size_t j = 0; j < z.rank(); ++j)
            if (sgn(s.form(z.basis[i], z.basis[j])) != 0)
                return "form does not vanish on basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    if (g > 0) {
        // direct summand iff every invariant factor of the basis matrix is 1
        SnfResult f = snf(z.basis_matrix());
        for (const auto& d : f.diag)
            if (d != 1) return "span is not a direct summand (invariant factor " + d.get_str() + ")";
    }
    return "";
}

} // namespace

bool is_metabolizer(const SeifertMatrix& s, const Metabolizer& z) { return check(s, z).empty(); }

void require_metabolizer(const SeifertMatrix& s, const Metabolizer& z) {
    std::string why = check(s, z);
    if (!why.empty()) fail(Errc::NotMetabolizer, "not a metabolizer: " + why);
}

} // namespace knotconc
