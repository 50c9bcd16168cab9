#include "knotconc/catalog.hpp"

namespace knotconc {

CatalogEntry twist_entry(const Int& k) {
    IntMatrix a(2, 2);
    a.at(0, 0) = -1;
    a.at(0, 1) = 1;
    a.at(1, 1) = k;
    return CatalogEntry{"twist:" + k.get_str(), SeifertMatrix::validate(a),
                        "genus-1 twist family, Alexander -k t^2 + (2k+1) t - k", k};
}

std::vector<CatalogEntry> catalog_entries() {
    CatalogEntry unknot{"unknot", SeifertMatrix::validate(IntMatrix(0, 0)), "empty Seifert matrix", Int(0)};
    CatalogEntry trefoil = twist_entry(-1);
    trefoil.name = "trefoil";
    trefoil.note = "right-handed trefoil as the (-1)-twist knot";
    CatalogEntry fig8 = twist_entry(1);
    fig8.name = "figure8";
    fig8.note = "figure-eight knot as the 1-twist knot";
    CatalogEntry stevedore = twist_entry(2);
    stevedore.name = "stevedore";
    stevedore.note = "stevedore knot as the 2-twist knot";
    return {unknot, trefoil, fig8, stevedore};
}

CatalogEntry catalog_lookup(const std::string& name) {
    if (name.rfind("twist:", 0) == 0) {
        Int k;
        if (mpz_set_str(k.get_mpz_t(), name.substr(6).c_str(), 10) != 0)
            fail(Errc::ParseError, "bad twist parameter in '" + name + "'");
        return twist_entry(k);
    }
    for (auto& e : catalog_entries())
        if (e.name == name) return e;
    fail(Errc::ParseError, "unknown catalog knot '" + name + "'");
}

} // namespace knotconc
