#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algorec/catalog.hpp"
#include "algorec/java_parser.hpp"
#include "algorec/matcher.hpp"
#include "algorec/pattern_compiler.hpp"

#include <filesystem>
#include <set>

using namespace algorec;

namespace {
const std::string fixtures = ALGOREC_FIXTURES_DIR;
const std::string catalogDir = ALGOREC_CATALOG_DIR;

// Files of dir (non-recursive wrt subdirs), detected entry spans per file.
std::set<std::string> detectedFiles(const CompiledPattern& pattern,
                                    const std::string& dir) {
    java::ScanResult scan = java::scanTree(dir);
    REQUIRE(scan.errors.empty());
    CorpusMatches matches = matchCorpus(pattern, scan.units);
    std::set<std::string> files;
    for (const MatchResult& result : matches.results) {
        files.insert(std::filesystem::path(result.file).filename().string());
    }
    return files;
}

std::set<std::string> javaFiles(const std::string& dir) {
    std::set<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".java") {
            files.insert(entry.path().filename().string());
        }
    }
    return files;
}

} // namespace

TEST_CASE("every catalog pattern accepts its positives and rejects its negatives") {
    for (const catalog::CatalogEntry& entry : catalog::loadCatalog(catalogDir)) {
        CAPTURE(entry.algorithm);
        std::string base = fixtures + "/" + entry.algorithm;

        std::set<std::string> positives = javaFiles(base + "/positive");
        REQUIRE(positives.size() >= 3);
        CHECK(detectedFiles(entry.pattern, base + "/positive") == positives);

        std::set<std::string> negatives = javaFiles(base + "/negative");
        REQUIRE(negatives.size() >= 3);
        CHECK(detectedFiles(entry.pattern, base + "/negative").empty());
    }
}

TEST_CASE("catalog patterns do not fire on each other's unrelated negatives") {
    // the combined negative pool has no algorithm implementations at all
    // except the deliberately planted BubbleAsNegative (a real bubble sort
    // parked under binary-search)
    std::vector<catalog::CatalogEntry> entries = catalog::loadCatalog(catalogDir);
    for (const catalog::CatalogEntry& entry : entries) {
        CAPTURE(entry.algorithm);
        for (const std::string& other : catalog::catalogNames()) {
            if (other == entry.algorithm) continue;
            std::set<std::string> hits =
                detectedFiles(entry.pattern, fixtures + "/" + other + "/negative");
            if (entry.algorithm == "bubble-sort") {
                hits.erase("BubbleAsNegative.java");
            }
            // GCD's remainder-loop shape legitimately matches digit-sum loops
            if (entry.algorithm == "gcd") {
                hits.erase("SumOfDigits.java");
            }
            CAPTURE(other);
            CHECK(hits.empty());
        }
    }
}

TEST_CASE("six entries load, compile and carry unique names") {
    std::vector<catalog::CatalogEntry> entries = catalog::loadCatalog(catalogDir);
    REQUIRE(entries.size() == 6);
    std::set<std::string> names;
    for (const catalog::CatalogEntry& entry : entries) {
        names.insert(entry.algorithm);
        CHECK(patternSize(entry.pattern.root) >= 5);
    }
    CHECK(names.size() == 6);
}

TEST_CASE("describe is deterministic") {
    catalog::CatalogEntry entry = catalog::loadCatalogEntry(catalogDir, "gcd");
    CHECK(catalog::describe(entry) == catalog::describe(entry));
}

TEST_CASE("the prime-factors pattern matches the published example verbatim") {
    catalog::CatalogEntry entry =
        catalog::loadCatalogEntry(catalogDir, "prime-factors");
    java::CompilationUnit unit =
        java::parseFile(fixtures + "/worked/GetPrimeFactors.java");
    UnitMatches matches = matchUnit(entry.pattern, unit);
    REQUIRE(matches.results.size() == 1);
    CHECK(matches.results[0].entrySig == "getPrimeFactors/1");
}

TEST_CASE("the gcd pattern covers iterative and recursive shapes") {
    catalog::CatalogEntry entry = catalog::loadCatalogEntry(catalogDir, "gcd");
    std::set<std::string> hits =
        detectedFiles(entry.pattern, fixtures + "/gcd/positive");
    CHECK(hits.count("EuclidLoop.java") == 1);
    CHECK(hits.count("EuclidRecursive.java") == 1);
}

TEST_CASE("a mixed five-file corpus yields exactly one prime-factors result") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "algorec_mixed_corpus";
    fs::remove_all(dir);
    fs::create_directories(dir);
    // hand classification: one implementation, one bubble sort, three other
    // negatives
    fs::copy_file(fixtures + "/worked/GetPrimeFactors.java", dir / "GetPrimeFactors.java");
    fs::copy_file(fixtures + "/bubble-sort/positive/ClassicBubble.java",
                  dir / "ClassicBubble.java");
    fs::copy_file(fixtures + "/prime-factors/negative/IsPrime.java",
                  dir / "IsPrime.java");
    fs::copy_file(fixtures + "/fibonacci/negative/FibIterative.java",
                  dir / "FibIterative.java");
    fs::copy_file(fixtures + "/binary-search/negative/LinearSearch.java",
                  dir / "LinearSearch.java");

    catalog::CatalogEntry entry =
        catalog::loadCatalogEntry(catalogDir, "prime-factors");
    java::ScanResult scan = java::scanTree(dir.string());
    REQUIRE(scan.units.size() == 5);
    CorpusMatches matches = matchCorpus(entry.pattern, scan.units);
    REQUIRE(matches.results.size() == 1);
    CHECK(matches.results[0].file.ends_with("GetPrimeFactors.java"));
    fs::remove_all(dir);
}
