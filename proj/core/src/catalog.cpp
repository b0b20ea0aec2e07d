#include "cliffpair/catalog.hpp"

#include <stdexcept>

namespace cliffpair {

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries{
        {"sl3-so3", PairFamily::AI, 3, false},
        {"sl5-so5", PairFamily::AI, 5, false},
        {"sl7-so7", PairFamily::AI, 7, true},
        {"sl4-sp4", PairFamily::AII, 4, false},
        {"sl6-sp6", PairFamily::AII, 6, false},
        {"sl6-o6", PairFamily::AI, 6, true},
    };
    return entries;
}

const CatalogEntry* find_pair(const std::string& id) {
    for (const CatalogEntry& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

std::string pair_id(const SymmetricPair& pair) {
    size_t n = pair.rep_n();
    if (pair.family() == PairFamily::AII) return "sl" + std::to_string(n) + "-sp" + std::to_string(n);
    if (n % 2 == 0) return "sl" + std::to_string(n) + "-o" + std::to_string(n);
    return "sl" + std::to_string(n) + "-so" + std::to_string(n);
}

SymmetricPair build_catalog_pair(const std::string& id) {
    const CatalogEntry* e = find_pair(id);
    if (!e) throw std::invalid_argument("pair '" + id + "' is out of catalog");
    return SymmetricPair::build(e->family, e->n);
}

} // namespace cliffpair
