#ifndef KNOTCONC_CATALOG_HPP
#define KNOTCONC_CATALOG_HPP

#include <optional>
#include <string>

#include "knotconc/seifert.hpp"

namespace knotconc {

struct CatalogEntry {
    std::string name;
    SeifertMatrix matrix;
    std::string note;
    std::optional<Int> twist_k; // set for entries of the twist family
};

// "twist:K" for any integer K, plus the named entries "unknot", "trefoil",
// "figure8", "stevedore".
CatalogEntry catalog_lookup(const std::string& name);
CatalogEntry twist_entry(const Int& k);
std::vector<CatalogEntry> catalog_entries(); // the fixed named entries

} // namespace knotconc

#endif
