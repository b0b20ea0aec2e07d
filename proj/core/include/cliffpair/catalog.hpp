#pragma once

#include "cliffpair/symmetric_pair.hpp"

#include <string>
#include <vector>

namespace cliffpair {

struct CatalogEntry {
    std::string id;
    PairFamily family;
    size_t n;
    bool stretch; // requires --confirm-large in the CLI
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_pair(const std::string& id); // nullptr when absent
std::string pair_id(const SymmetricPair& pair);
SymmetricPair build_catalog_pair(const std::string& id); // throws for unknown ids

} // namespace cliffpair
