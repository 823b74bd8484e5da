#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algorec/catalog.hpp"
#include "algorec/java_parser.hpp"
#include "algorec/matcher.hpp"
#include "algorec/pattern_compiler.hpp"

#include <chrono>
#include <set>

using namespace algorec;
using namespace algorec::dsl;

namespace {
const std::string fixtures = ALGOREC_FIXTURES_DIR;
const std::string catalogDir = ALGOREC_CATALOG_DIR;

CompiledPattern twoBindingsPattern() {
    return compile(method().body(block()
                                     .has(depthWildcard(varDef().bindTo("i")))
                                     .has(depthWildcard(varRead().bindTo("i")))));
}

std::string display(const BindingSet& set, const std::string& id) {
    for (const auto& [name, value] : set) {
        if (name == id) return value.display;
    }
    return {};
}
} // namespace

TEST_CASE("worked example: prime factors pattern against its implementation") {
    CompiledPattern pattern =
        catalog::loadCatalogEntry(catalogDir, "prime-factors").pattern;
    java::CompilationUnit unit =
        java::parseFile(fixtures + "/worked/GetPrimeFactors.java");

    auto start = std::chrono::steady_clock::now();
    UnitMatches matches = matchUnit(pattern, unit);
    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();

    REQUIRE(matches.results.size() == 1);
    const MatchResult& result = matches.results.front();
    CHECK(result.entryName == "getPrimeFactors");
    // covers the whole method
    REQUIRE(unit.entryPoints.size() == 1);
    CHECK(result.span == unit.entryPoints.front()->span);
    REQUIRE(result.bindingAlternatives.size() == 1);
    const BindingSet& bindings = result.bindingAlternatives.front();
    CHECK(display(bindings, "method") == "getPrimeFactors");
    CHECK(display(bindings, "num") == "n");
    CHECK(display(bindings, "index") == "i");
    CHECK(elapsed < 1.0);
}

TEST_CASE("two-binding example yields two raw states unified into one result") {
    CompiledPattern pattern = twoBindingsPattern();
    java::CompilationUnit unit = java::parseFile(fixtures + "/worked/TwoBindings.java");
    UnitMatches matches = matchUnit(pattern, unit);
    REQUIRE(matches.results.size() == 1);
    const MatchResult& result = matches.results.front();
    CHECK(result.unifiedStateCount == 2);
    REQUIRE(result.bindingAlternatives.size() == 2);
    std::set<std::string> alternatives = {
        display(result.bindingAlternatives[0], "i"),
        display(result.bindingAlternatives[1], "i")};
    CHECK(alternatives == std::set<std::string>{"x", "y"});
}

TEST_CASE("binding clash empties the state set at the second site") {
    java::CompilationUnit unit = java::parseSource(
        "class T { int m(int a, int b) { return a + b; } }", "T.java");
    CompiledPattern same = compile(binOp().ops("+")
                                       .lhs(varRead().bindTo("num"))
                                       .rhs(varRead().bindTo("num")));
    const AstNode* plus = nullptr;
    forEachNode(unit.root, [&](const AstNode& n) {
        if (n.kind == NodeKind::BinOp) plus = &n;
    });
    REQUIRE(plus != nullptr);
    CHECK(stepNode(same, same.root, *plus, MatchState{}).empty());

    CompiledPattern different = compile(binOp().ops("+")
                                            .lhs(varRead().bindTo("x"))
                                            .rhs(varRead().bindTo("y")));
    CHECK(stepNode(different, different.root, *plus, MatchState{}).size() == 1);
}

TEST_CASE("greedy wildcards enumerate all completions, non-greedy stop early") {
    java::CompilationUnit unit = java::parseSource(
        "class T { void m(int a) { a = 1; a = 2; a = 3; } }", "T.java");
    // [wide, optional(any)] over a three-statement block:
    //   non-greedy: wide consumes two, optional takes the third -> 1 state
    //   greedy: additionally wide consumes all three, optional skipped
    CompiledPattern lazy =
        compile(method().body(block().next(wideWildcard()).next(optional(any()))));
    CompiledPattern eager = compile(method().body(
        block().next(wideWildcard().greedy()).next(optional(any()))));
    UnitMatches lazyM = matchUnit(lazy, unit);
    UnitMatches eagerM = matchUnit(eager, unit);
    REQUIRE(lazyM.results.size() == 1);
    REQUIRE(eagerM.results.size() == 1);
    CHECK(lazyM.results[0].unifiedStateCount == 1);
    CHECK(eagerM.results[0].unifiedStateCount == 2);
}

TEST_CASE("trailing wildcard plus optional return yields three greedy states") {
    // the block ends with exactly one return; wildcard and optional give
    // skip/consume/neither
    java::CompilationUnit unit = java::parseSource(
        "class T { int m(int a) { return a; } }", "T.java");
    CompiledPattern pattern = compile(method().body(block()
                                                        .next(wideWildcard().greedy())
                                                        .next(optional(returns()))
                                                        .next(wideWildcard().greedy())));
    UnitMatches matches = matchUnit(pattern, unit);
    REQUIRE(matches.results.size() == 1);
    CHECK(matches.results[0].unifiedStateCount == 3);
}

TEST_CASE("depth wildcard lands once per valid site under binding constraints") {
    java::CompilationUnit unit = java::parseSource(
        "class T { int m() { int x = 2; int y = 3; return x + y; } }", "T.java");
    CompiledPattern pattern = twoBindingsPattern();
    REQUIRE(unit.entryPoints.size() == 1);
    EntryOutcome outcome = matchEntry(pattern, unit, *unit.entryPoints.front());
    REQUIRE(outcome.result.has_value());
    // x-binding and y-binding; within each the read site is unique
    CHECK(outcome.result->unifiedStateCount == 2);
}

TEST_CASE("unordered blocks allow extra statements and any order") {
    CompiledPattern pattern = compile(method().body(
        block().has(returns()).has(varDef())));
    java::CompilationUnit ordered = java::parseSource(
        "class T { int m() { int x = 1; f(); return x; } }", "T.java");
    UnitMatches m = matchUnit(pattern, ordered);
    CHECK(m.results.size() == 1); // def before return, extra call tolerated
}

TEST_CASE("ordered blocks are anchored: leftover statements fail") {
    CompiledPattern exact =
        compile(method().body(block().next(varDef()).next(returns())));
    java::CompilationUnit extra = java::parseSource(
        "class T { int m() { int x = 1; f(); return x; } }", "T.java");
    CHECK(matchUnit(exact, extra).results.empty());

    java::CompilationUnit fits = java::parseSource(
        "class T { int m() { int x = 1; return x; } }", "T.java");
    CHECK(matchUnit(exact, fits).results.size() == 1);
}

TEST_CASE("state budget fires on the pathological fixture") {
    java::CompilationUnit unit =
        java::parseFile(fixtures + "/pathological/ManyVariables.java");
    CompiledPattern pattern = compile(method().body(
        block()
            .has(depthWildcard(varDef().bindTo("a")))
            .has(depthWildcard(varDef().bindTo("b")))
            .has(depthWildcard(varDef().bindTo("c")))
            .has(depthWildcard(varRead().bindTo("a")))
            .has(depthWildcard(varRead().bindTo("b")))
            .has(depthWildcard(varRead().bindTo("c")))));
    REQUIRE(unit.entryPoints.size() == 1);
    EntryOutcome outcome = matchEntry(pattern, unit, *unit.entryPoints.front(),
                                      /*budget=*/1000);
    CHECK_FALSE(outcome.result.has_value());
    REQUIRE(outcome.diagnostic.has_value());
    CHECK(outcome.diagnostic->budget == 1000);
    CHECK(outcome.diagnostic->statesCreated > 1000);

    // and the same pattern with a generous budget does match
    EntryOutcome ok = matchEntry(pattern, unit, *unit.entryPoints.front());
    CHECK(ok.result.has_value());
}

TEST_CASE("depth wildcards do not cross into nested executables by default") {
    java::CompilationUnit unit = java::parseSource(R"(
class T {
    void outer() {
        Runnable r = new Runnable() {
            public void run() {
                int hidden = 1;
                hidden = hidden + 1;
            }
        };
        r.run();
    }
}
)",
                                                   "T.java");
    CompiledPattern sealed = compile(method()
                                         .name("outer")
                                         .body(block().anywhereAfter(assignment())));
    CHECK(matchUnit(sealed, unit).results.empty());

    CompiledPattern open =
        compile(method().name("outer").body(block().anywhereAfter(assignment())),
                PatternOptions{true});
    CHECK(matchUnit(open, unit).results.size() == 1);
}

TEST_CASE("results are deterministic and unified per entry") {
    java::ScanResult scan = java::scanTree(fixtures + "/bubble-sort");
    REQUIRE(scan.errors.empty());
    CompiledPattern pattern =
        catalog::loadCatalogEntry(catalogDir, "bubble-sort").pattern;
    CorpusMatches first = matchCorpus(pattern, scan.units);
    CorpusMatches second = matchCorpus(pattern, scan.units, kDefaultStateBudget, 4);
    REQUIRE(first.results.size() == second.results.size());
    for (std::size_t i = 0; i < first.results.size(); ++i) {
        CHECK(first.results[i].file == second.results[i].file);
        CHECK(first.results[i].span == second.results[i].span);
        CHECK(first.results[i].bindingAlternatives ==
              second.results[i].bindingAlternatives);
    }
    // unification: one result per entry span
    for (std::size_t i = 1; i < first.results.size(); ++i) {
        bool duplicate = first.results[i].file == first.results[i - 1].file &&
                         first.results[i].span == first.results[i - 1].span;
        CHECK_FALSE(duplicate);
    }
}

TEST_CASE("methodCall pattern binds signatures for recursion detection") {
    java::CompilationUnit unit = java::parseSource(R"(
class T {
    int fib(int n) {
        if (n <= 1) { return n; }
        return fib(n - 1) + fib(n - 2);
    }
    int notRecursive(int n) { return fib(n); }
}
)",
                                                   "T.java");
    CompiledPattern recursive = compile(
        method().bindTo("m").body(
            block().anywhereAfter(methodCall().bindTo("m"))));
    UnitMatches matches = matchUnit(recursive, unit);
    REQUIRE(matches.results.size() == 1);
    CHECK(matches.results[0].entryName == "fib");
}

TEST_CASE("Other nodes are matchable only by wildcards and any()") {
    java::CompilationUnit unit = java::parseSource(R"(
class T {
    int pick(int x) {
        switch (x) { default: break; }
        return x;
    }
}
)",
                                                   "T.java");
    // a concrete kind pattern cannot consume the switch statement
    CompiledPattern concrete =
        compile(method().body(block().next(ite()).next(returns())));
    CHECK(matchUnit(concrete, unit).results.empty());
    // any() can
    CompiledPattern viaAny =
        compile(method().body(block().next(any()).next(returns())));
    CHECK(matchUnit(viaAny, unit).results.size() == 1);
    // and so can a wildcard
    CompiledPattern viaWildcard =
        compile(method().body(block().next(wideWildcard()).next(returns())));
    CHECK(matchUnit(viaWildcard, unit).results.size() == 1);
}

TEST_CASE("anyType matches type references only") {
    java::CompilationUnit unit = java::parseSource(
        "class T { void m() { int x = 1; } }", "T.java");
    CompiledPattern typed = compile(method().body(
        block().next(varDef().type(anyType()))));
    CHECK(matchUnit(typed, unit).results.size() == 1);

    CompiledPattern named = compile(method().body(
        block().next(varDef().type(typeRef().name("int")))));
    CHECK(matchUnit(named, unit).results.size() == 1);

    CompiledPattern wrongName = compile(method().body(
        block().next(varDef().type(typeRef().name("long")))));
    CHECK(matchUnit(wrongName, unit).results.empty());
}

TEST_CASE("hasParameters matches unordered with extra parameters allowed") {
    java::CompilationUnit unit = java::parseSource(R"(
class T {
    int three(int[] data, int lo, int hi) { return lo; }
    int swappedOrder(int lo, int[] data, int hi) { return lo; }
    int two(int lo, int hi) { return lo; }
}
)",
                                                   "T.java");
    CompiledPattern wantsArrayAndTwoInts = compile(method().hasParameters(
        param().type(typeRef().name("int")), param().type(typeRef().name("int"))));
    UnitMatches matches = matchUnit(wantsArrayAndTwoInts, unit);
    // all three methods have at least two int parameters in some order
    CHECK(matches.results.size() == 3);

    CompiledPattern three =
        compile(method().hasParameters(param(), param(), param()));
    CHECK(matchUnit(three, unit).results.size() == 2);

    // ordered parameters() requires exact arity and positions
    CompiledPattern exact = compile(method().parameters(
        {param().type(typeRef().name("int")), param().type(typeRef().name("int"))}));
    UnitMatches exactMatches = matchUnit(exact, unit);
    REQUIRE(exactMatches.results.size() == 1);
    CHECK(exactMatches.results[0].entryName == "two");
}

TEST_CASE("do-while and for-each loops carry the documented shape") {
    java::CompilationUnit unit = java::parseSource(R"(
class T {
    int m(int[] values) {
        int sum = 0;
        do {
            sum += 1;
        } while (sum < 10);
        for (int v : values) {
            sum += v;
        }
        return sum;
    }
}
)",
                                                   "T.java");
    CompiledPattern doShape = compile(method().body(block().after(
        doWhileLoop().condition(binOp().ops("<")))));
    CHECK(matchUnit(doShape, unit).results.size() == 1);

    CompiledPattern eachShape = compile(method().body(block().after(
        forEachLoop().body(block().after(assignment())))));
    CHECK(matchUnit(eachShape, unit).results.size() == 1);

    // loop() covers both kinds
    CompiledPattern anyLoop = compile(method().body(
        block().after(loop()).after(loop()).after(returns())));
    CHECK(matchUnit(anyLoop, unit).results.size() == 1);
}

TEST_CASE("method-rooted patterns match constructors too") {
    java::CompilationUnit unit = java::parseSource(R"(
class Box {
    int size;
    Box(int size) {
        this.size = size + 1;
    }
}
)",
                                                   "Box.java");
    CompiledPattern pattern =
        compile(method().body(block().after(assignment())));
    UnitMatches matches = matchUnit(pattern, unit);
    REQUIRE(matches.results.size() == 1);
    CHECK(matches.results[0].entrySig == "Box/1");
}

TEST_CASE("field access, literal text and call arity predicates") {
    java::CompilationUnit unit = java::parseSource(R"(
class Box {
    int size;
    void reset() {
        this.size = 0;
        resize(1, 2);
    }
    void resize(int w, int h) { size = w + h; }
}
)",
                                                   "Box.java");
    CompiledPattern fieldWrite = compile(method().name("reset").body(
        block().after(assignment()
                          .lhs(fieldAccess().name("size"))
                          .rhs(literal().text("0")))));
    CHECK(matchUnit(fieldWrite, unit).results.size() == 1);

    CompiledPattern wrongText = compile(method().name("reset").body(
        block().after(assignment().rhs(literal().text("7")))));
    CHECK(matchUnit(wrongText, unit).results.empty());

    CompiledPattern binaryCall = compile(method().body(
        block().after(methodCall().name("resize").arity(2))));
    CHECK(matchUnit(binaryCall, unit).results.size() == 1);

    CompiledPattern unaryCall = compile(method().body(
        block().after(methodCall().name("resize").arity(1))));
    CHECK(matchUnit(unaryCall, unit).results.empty());
}
