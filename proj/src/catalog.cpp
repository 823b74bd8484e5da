#include "algorec/catalog.hpp"

#include "algorec/pattern_compiler.hpp"
#include "algorec/pattern_io.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace algorec::catalog {

using namespace algorec::dsl;

namespace {

// --- prime factors -----------------------------------------------------------
//
// Trial division: an outer loop over candidate divisors and an inner loop (or
// an if, for implementations that only collect distinct factors) that divides
// the remaining value while the candidate divides it evenly.
PatternBuilder primeFactorsBuilder() {
    auto innerLoop =
        loop()
            .condition(binOp()
                           .ops("%", "/")
                           .lhs(varRead().bindTo("num"))
                           .rhs(varRead().bindTo("index")))
            .body(block().anywhereAfter(assignment()
                                            .lhs(varWrite().bindTo("num"))
                                            .anywhereInRhs(varRead().bindTo("index"))));
    auto innerIf =
        ite()
            .condition(binOp()
                           .ops("%", "/")
                           .lhs(varRead().bindTo("num"))
                           .rhs(varRead().bindTo("index")))
            .then(block().anywhereAfter(assignment()
                                            .lhs(varWrite().bindTo("num"))
                                            .anywhereInRhs(varRead().bindTo("index"))));
    return method().bindTo("method").body(
        block()
            .after(loop()
                       .condition(binOp().ops("<", "<="))
                       .body(block().after(oneOf(innerLoop, innerIf))))
            .after(optional(returns())));
}

// --- greatest common divisor ----------------------------------------------------
PatternBuilder gcdBuilder() {
    auto modStep = varDefOrAss().anywhereInRhs(binOp().ops("%"));
    auto euclidLoop = loop()
                          .condition(binOp().ops("!=", ">", ">=", "=="))
                          .body(block().after(modStep));
    auto subtractStep = assignment().anywhereInRhs(binOp().ops("-"));
    auto subtractLoop =
        loop()
            .condition(binOp().ops("!=", ">", "<"))
            .body(block().anywhereAfter(ite()
                                            .condition(binOp().ops(">", ">=", "<", "<="))
                                            .then(block().anywhereAfter(subtractStep))
                                            .optionalOtherwise(subtractStep)));
    auto recursiveCall = depthWildcard(
        methodCall().bindTo("method").anywhereInArgs(binOp().ops("%")));
    return method().bindTo("method").body(
        block()
            .after(oneOf(euclidLoop, subtractLoop, recursiveCall))
            .after(optional(returns())));
}

// --- fibonacci -------------------------------------------------------------------
//
// Recursive shape only: a comparison base case and the sum of two calls back
// into the bound method, either after the base-case if or inside its else.
PatternBuilder fibonacciBuilder() {
    auto sumOfCalls = binOp()
                          .ops("+")
                          .anywhereInLhs(methodCall().bindTo("method"))
                          .anywhereInRhs(methodCall().bindTo("method"));
    auto baseCase = ite().condition(binOp().ops("<", "<=", "==", ">", ">="));
    auto earlyReturnShape =
        block().after(baseCase).anywhereAfter(sumOfCalls);
    auto elseShape = block().anywhereAfter(
        ite()
            .condition(binOp().ops("<", "<=", "==", ">", ">="))
            .otherwise(block().anywhereAfter(sumOfCalls)));
    return method().bindTo("method").body(oneOf(earlyReturnShape, elseShape));
}

// --- palindrome ---------------------------------------------------------------------
PatternBuilder palindromeBuilder() {
    auto element = oneOf(methodCall().name("charAt"), arrayAccess());
    auto charCompare = ite().condition(binOp()
                                           .ops("!=", "==")
                                           .compareCommutative()
                                           .anywhereInLhs(element)
                                           .anywhereInRhs(element));
    auto twoPointerWhile =
        whileLoop()
            .condition(binOp().ops("<", ">", "!=", "<=", ">="))
            .body(block().anywhereAfter(charCompare).after(anyMod()));
    auto countingLoop = loop()
                            .condition(binOp().ops("<", "<=", ">", ">=", "!="))
                            .body(block().anywhereAfter(charCompare));
    auto loopBlock = block()
                         .after(oneOf(twoPointerWhile, countingLoop))
                         .after(optional(returns()));
    auto equalsCall = oneOf(methodCall().name("equals"),
                            methodCall().name("equalsIgnoreCase"),
                            methodCall().name("contentEquals"));
    auto reverseThenEquals = block()
                                 .anywhereAfter(methodCall().name("reverse"))
                                 .anywhereAfter(equalsCall);
    auto equalsOfReverse = block().anywhereAfter(
        methodCall().name("equals").anywhereInArgs(methodCall().name("reverse")));
    auto recursiveShape = block()
                              .anywhereAfter(charCompare)
                              .anywhereAfter(methodCall().bindTo("method"));
    return method().bindTo("method").body(
        oneOf(loopBlock, reverseThenEquals, equalsOfReverse, recursiveShape));
}

// --- bubble sort ----------------------------------------------------------------------
PatternBuilder bubbleSortBuilder() {
    auto element = oneOf(arrayAccess(), methodCall().name("get"));
    auto swapBlock = oneOf(
        block()
            .after(assignment().lhs(arrayAccess()))
            .after(assignment().lhs(arrayAccess())),
        block().anywhereAfter(methodCall().name("swap")));
    auto compareAndSwap = ite()
                              .condition(binOp()
                                             .ops("<", ">", "<=", ">=")
                                             .compareCommutative()
                                             .anywhereInLhs(element)
                                             .anywhereInRhs(element))
                              .then(swapBlock);
    auto innerLoop = loop().body(block().anywhereAfter(compareAndSwap));
    auto outerLoop = loop().body(block().anywhereAfter(innerLoop));
    return method().bindTo("method").body(block().anywhereAfter(outerLoop));
}

// --- binary search ---------------------------------------------------------------------
PatternBuilder binarySearchBuilder() {
    auto midCalc = varDefOrAss().anywhereInRhs(binOp().ops("/", ">>", ">>>"));
    auto element = oneOf(arrayAccess(), methodCall().name("get"),
                         methodCall().name("compareTo"));
    // The probed element either appears in the comparison itself or is first
    // stored in a local (int cmp = list.get(mid).compareTo(key)).
    auto probe = oneOf(
        ite().condition(binOp()
                            .ops("==", "!=", "<", ">", "<=", ">=")
                            .compareCommutative()
                            .anywhereInLhs(element)),
        varDefOrAss().anywhereInRhs(element));
    auto iterative =
        method().bindTo("method").body(block().anywhereAfter(
            loop()
                .condition(binOp().ops("<=", "<", "!=", ">=", ">"))
                .body(block().after(midCalc).anywhereAfter(probe))));
    auto recursive =
        method()
            .bindTo("method")
            .hasParameters(param(), param(), param())
            .body(block()
                      .after(midCalc)
                      .anywhereAfter(probe)
                      .anywhereAfter(methodCall().bindTo("method")));
    return oneOf(iterative, recursive);
}

struct CatalogSpec {
    const char* algorithm;
    PatternBuilder (*builder)();
    std::vector<std::string> provenance;
    std::vector<std::string> variants;
};

const std::vector<CatalogSpec>& specs() {
    static const std::vector<CatalogSpec> entries = {
        {"prime-factors",
         primeFactorsBuilder,
         {"textbook trial division: outer for over candidates, inner while "
          "dividing out each factor",
          "tutorial variant collecting distinct factors with an if instead of "
          "the inner while"},
         {"iterative only", "return or print (trailing return optional)",
          "n = n / i and n /= i spellings both covered"}},
        {"gcd",
         gcdBuilder,
         {"Euclids algorithm with a remainder loop (while b != 0)",
          "recursive remainder form gcd(b, a % b)",
          "subtraction form: loop with if/else subtracting the smaller value"},
         {"iterative and recursive", "subtraction variant with optional else"}},
        {"fibonacci",
         fibonacciBuilder,
         {"classic recursion: comparison base case, then fib(n-1) + fib(n-2)"},
         {"recursive only (iterative implementations are not covered)",
          "early-return and else-block base cases"}},
        {"palindrome",
         palindromeBuilder,
         {"two-pointer loop comparing charAt(i) with charAt(j)",
          "counting loop comparing mirrored positions",
          "StringBuilder reverse() followed by equals()",
          "recursive compare-and-recurse form"},
         {"string charAt and char-array indexing", "reverse-and-compare, one or "
          "two statement spellings",
          "recursive variant"}},
        {"bubble-sort",
         bubbleSortBuilder,
         {"nested counting loops, adjacent compare, in-place swap via temp",
          "flagged do/while variant with early exit",
          "list variant using get() and Collections.swap()"},
         {"array and List element access", "swap via temporary or swap() call"}},
        {"binary-search",
         binarySearchBuilder,
         {"iterative halving loop: mid = (lo + hi) / 2, probe, shrink bounds",
          "recursive variant carrying lo/hi parameters"},
         {"division and shift mid computation", "array, List.get and compareTo "
          "probes",
          "recursive form requires at least three parameters"}},
    };
    return entries;
}

const CatalogSpec& specFor(const std::string& algorithm) {
    for (const CatalogSpec& spec : specs()) {
        if (algorithm == spec.algorithm) return spec;
    }
    throw CatalogCorrupt("unknown catalog algorithm: " + algorithm);
}

} // namespace

const std::vector<std::string>& catalogNames() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const CatalogSpec& spec : specs()) out.push_back(spec.algorithm);
        return out;
    }();
    return names;
}

dsl::PatternBuilder catalogBuilder(const std::string& algorithm) {
    return specFor(algorithm).builder();
}

const std::vector<std::string>& catalogProvenance(const std::string& algorithm) {
    return specFor(algorithm).provenance;
}

const std::vector<std::string>& catalogVariants(const std::string& algorithm) {
    return specFor(algorithm).variants;
}

CatalogEntry loadCatalogEntry(const std::string& dir, const std::string& algorithm) {
    const CatalogSpec& spec = specFor(algorithm);
    CatalogEntry entry;
    entry.algorithm = algorithm;
    entry.file = dir + "/" + algorithm + ".pattern.json";
    if (!std::filesystem::exists(entry.file)) {
        throw CatalogCorrupt("missing pattern file: " + entry.file);
    }
    try {
        entry.pattern = loadPatternFile(entry.file);
    } catch (const FormatError& e) {
        throw CatalogCorrupt("pattern file for " + algorithm + ": " + e.what());
    }
    entry.provenance = spec.provenance;
    entry.variants = spec.variants;
    return entry;
}

std::vector<CatalogEntry> loadCatalog(const std::string& dir) {
    std::vector<CatalogEntry> entries;
    for (const std::string& name : catalogNames()) {
        entries.push_back(loadCatalogEntry(dir, name));
    }
    return entries;
}

std::string describe(const CatalogEntry& entry) {
    std::ostringstream out;
    out << entry.algorithm << " (" << entry.file << ")\n";
    out << "covers:\n";
    for (const std::string& variant : entry.variants) {
        out << "  - " << variant << "\n";
    }
    out << "derived from:\n";
    for (const std::string& source : entry.provenance) {
        out << "  - " << source << "\n";
    }
    out << "pattern:\n" << describePattern(entry.pattern);
    return out.str();
}

} // namespace algorec::catalog
