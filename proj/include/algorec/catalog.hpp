#pragma once

#include "algorec/pattern_builder.hpp"
#include "algorec/pattern_tree.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace algorec::catalog {

struct CatalogCorrupt : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One shipped search pattern: the pattern file plus notes on which
/// reference-implementation shapes it was derived from and which variants
/// it covers.
struct CatalogEntry {
    std::string algorithm;  // unique name, doubles as the pattern name
    std::string file;       // path of the pattern file it was loaded from
    CompiledPattern pattern;
    std::vector<std::string> provenance;
    std::vector<std::string> variants;
};

/// The six shipped algorithm names, in catalog order.
const std::vector<std::string>& catalogNames();

/// Authoring source of a catalog pattern (also used by the generator tool
/// that writes the pattern files and by the desugaring tests).
dsl::PatternBuilder catalogBuilder(const std::string& algorithm);

const std::vector<std::string>& catalogProvenance(const std::string& algorithm);
const std::vector<std::string>& catalogVariants(const std::string& algorithm);

/// Loads the six entries from a catalog directory (one
/// `<algorithm>.pattern.json` per entry). Throws CatalogCorrupt when a file
/// is missing or does not deserialize.
std::vector<CatalogEntry> loadCatalog(const std::string& dir);

/// Loads one entry by name.
CatalogEntry loadCatalogEntry(const std::string& dir, const std::string& algorithm);

/// Human-readable outline of the entry's pattern tree.
std::string describe(const CatalogEntry& entry);

} // namespace algorec::catalog
