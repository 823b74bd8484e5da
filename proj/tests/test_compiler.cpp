#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algorec/catalog.hpp"
#include "algorec/pattern_compiler.hpp"

#include <functional>

using namespace algorec;
using namespace algorec::dsl;

namespace {

bool equivalent(const PatternBuilder& a, const PatternBuilder& b) {
    return structurallyEqual(compile(a), compile(b));
}

// Collects paths (child index sequences) where two trees differ.
void diffPaths(const PatternNode& a, const PatternNode& b, std::string path,
               std::vector<std::string>& out) {
    bool headEqual =
        a.op == b.op && a.kinds == b.kinds && a.predicates == b.predicates &&
        a.childOrder == b.childOrder && a.binding == b.binding &&
        a.greedy == b.greedy && a.children.size() == b.children.size();
    if (!headEqual) {
        out.push_back(path);
        return;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        diffPaths(a.children[i], b.children[i], path + "/" + std::to_string(i), out);
    }
}

} // namespace

TEST_CASE("after interleaves wide wildcards and appends a trailing one") {
    CHECK(equivalent(
        block().after(forLoop()).after(optional(returns())),
        block()
            .next(wideWildcard())
            .next(forLoop())
            .next(wideWildcard())
            .next(optional(returns()))
            .next(wideWildcard())));
}

TEST_CASE("anywhereAfter wraps its statement in a depth wildcard") {
    CHECK(equivalent(block().anywhereAfter(assignment()),
                     block()
                         .next(wideWildcard())
                         .next(depthWildcard(assignment()))
                         .next(wideWildcard())));
}

TEST_CASE("anywhereInRhs and anywhereInLhs install depth wildcards in slots") {
    CHECK(equivalent(assignment().anywhereInRhs(varRead()),
                     assignment().rhs(depthWildcard(varRead()))));
    CHECK(equivalent(binOp().anywhereInLhs(varRead()),
                     binOp().lhs(depthWildcard(varRead()))));
    CHECK(equivalent(varDef().anywhereInRhs(literal()),
                     varDef().rhs(depthWildcard(literal()))));
}

TEST_CASE("loop expands to the four loop kinds") {
    CHECK(equivalent(loop(), oneOf(forLoop(), whileLoop(), doWhileLoop(),
                                   forEachLoop())));
}

TEST_CASE("loop with a condition drops the for-each alternative") {
    PatternBuilder cond = binOp().ops("<", "<=");
    PatternBuilder body = block().after(assignment());
    CHECK(equivalent(loop().condition(cond).body(body),
                     oneOf(forLoop().condition(cond).body(body),
                           whileLoop().condition(cond).body(body),
                           doWhileLoop().condition(cond).body(body))));
}

TEST_CASE("varDefOrAss expands to oneOf and distributes the rhs slot") {
    CHECK(equivalent(varDefOrAss(), oneOf(varDef(), assignment())));
    CHECK(equivalent(varDefOrAss().anywhereInRhs(binOp().ops("%")),
                     oneOf(varDef().anywhereInRhs(binOp().ops("%")),
                           assignment().anywhereInRhs(binOp().ops("%")))));
}

TEST_CASE("anyMod expands to assignment and increment forms") {
    CHECK(equivalent(anyMod(), oneOf(assignment(), unaryOp().ops("++"),
                                     unaryOp().ops("--"))));
}

TEST_CASE("optionalOtherwise expands to optional(block().after(s))") {
    PatternBuilder stmt = assignment().anywhereInRhs(binOp().ops("-"));
    CHECK(equivalent(ite().optionalOtherwise(stmt),
                     ite().otherwise(optional(block().after(stmt)))));
}

TEST_CASE("hasParameters compiles to an unordered parameter group") {
    CompiledPattern p = compile(method().hasParameters(param(), param()));
    REQUIRE(p.root.children.size() == 2);
    const PatternNode& params = p.root.children[0];
    CHECK(params.op == PatternNode::OpKind::Kind);
    REQUIRE(params.kinds.size() == 1);
    CHECK(params.kinds[0] == NodeKind::Other);
    CHECK(params.otherLabel == "params");
    CHECK(params.childOrder == ChildOrder::Unordered);
    CHECK(params.children.size() == 2);
    // body slot stays optional so bodiless declarations are not force-required
    CHECK(p.root.children[1].op == PatternNode::OpKind::Optional);
}

TEST_CASE("compareCommutative sets the operand order to unordered") {
    CompiledPattern p = compile(binOp().ops("==").compareCommutative());
    CHECK(p.root.childOrder == ChildOrder::Unordered);
    CHECK(p.root.predicates.size() == 1);
    CHECK(compile(binOp().ops("==")).root.childOrder == ChildOrder::Ordered);
}

TEST_CASE("condition slots compile to depth wildcards") {
    CompiledPattern p = compile(whileLoop().condition(binOp().ops("%")));
    REQUIRE(p.root.children.size() == 2);
    CHECK(p.root.children[0].op == PatternNode::OpKind::DeepWildcard);
    CHECK(p.root.children[0].children[0].predicates.size() == 1);
}

TEST_CASE("unfilled required slots compile to any") {
    CompiledPattern p = compile(forLoop().body(block()));
    REQUIRE(p.root.children.size() == 4);
    CHECK(p.root.children[0].op == PatternNode::OpKind::Any); // init
    CHECK(p.root.children[1].op == PatternNode::OpKind::Any); // condition
    CHECK(p.root.children[2].op == PatternNode::OpKind::Any); // update
    CHECK(p.root.children[3].op == PatternNode::OpKind::Kind);
}

TEST_CASE("a commutative comparison with a bound rhs compiles to the documented tree") {
    CompiledPattern p = compile(block().after(
        binOp().ops("==").compareCommutative().anywhereInRhs(
            varRead().bindTo("index"))));
    // block -> [wide, binOp{==, unordered}[any, deep[varRead bind index]], wide]
    REQUIRE(p.root.children.size() == 3);
    CHECK(p.root.children[0].op == PatternNode::OpKind::WideWildcard);
    CHECK(p.root.children[2].op == PatternNode::OpKind::WideWildcard);
    const PatternNode& cmp = p.root.children[1];
    CHECK(cmp.childOrder == ChildOrder::Unordered);
    REQUIRE(cmp.children.size() == 2);
    CHECK(cmp.children[0].op == PatternNode::OpKind::Any);
    CHECK(cmp.children[1].op == PatternNode::OpKind::DeepWildcard);
    CHECK(cmp.children[1].children[0].binding == "index");
}

TEST_CASE("compile(optional(returns())) keeps the wrapper and adds nothing") {
    CompiledPattern p = compile(optional(returns()));
    CHECK(p.root.op == PatternNode::OpKind::Optional);
    REQUIRE(p.root.children.size() == 1);
    CHECK(p.root.children[0].predicates.empty());
    CHECK(p.root.children[0].kinds ==
          std::vector<NodeKind>{NodeKind::Return});
}

TEST_CASE("compilation is deterministic and repeatable") {
    for (const std::string& name : catalog::catalogNames()) {
        CompiledPattern a = compile(catalog::catalogBuilder(name));
        CompiledPattern b = compile(catalog::catalogBuilder(name));
        CAPTURE(name);
        CHECK(structurallyEqual(a, b));
    }
}

TEST_CASE("binding table lists every reachable binding id exactly") {
    CompiledPattern p = compile(catalog::catalogBuilder("prime-factors"));
    REQUIRE(p.bindings.sites.count("method") == 1);
    REQUIRE(p.bindings.sites.count("num") == 1);
    REQUIRE(p.bindings.sites.count("index") == 1);
    CHECK(p.bindings.sites.size() == 3);
    // the root binding is unconditional, the loop-variant ones are not
    CHECK(p.bindings.required == std::set<std::string>{"method"});
    // every site id refers to a node of the tree carrying that binding
    std::map<int, const PatternNode*> index;
    std::function<void(const PatternNode&)> collect = [&](const PatternNode& n) {
        index[n.id] = &n;
        for (const PatternNode& c : n.children) collect(c);
    };
    collect(p.root);
    int boundNodes = 0;
    for (const auto& [id, node] : index) {
        if (node->binding) ++boundNodes;
    }
    int siteCount = 0;
    for (const auto& [name, sites] : p.bindings.sites) {
        siteCount += static_cast<int>(sites.size());
        for (int id : sites) {
            REQUIRE(index.count(id) == 1);
            CHECK(index[id]->binding == name);
        }
    }
    CHECK(boundNodes == siteCount);
}

TEST_CASE("no convenience construct survives compilation") {
    std::function<void(const PatternNode&)> walk = [&](const PatternNode& n) {
        // compiled trees contain only the seven core operators; convenience
        // tags do not exist in PatternNode at all, so it suffices to check
        // the enum range
        CHECK(static_cast<int>(n.op) >= 0);
        CHECK(static_cast<int>(n.op) <= 6);
        for (const PatternNode& c : n.children) walk(c);
    };
    for (const std::string& name : catalog::catalogNames()) {
        walk(compile(catalog::catalogBuilder(name)).root);
    }
}

// Transcriptions of the two published prime-factors pattern spellings: the
// core-primitive form and the convenience form. Their compiled trees must
// agree everywhere except the documented expansion sites.
namespace {

PatternBuilder corePrimeFactors(bool trailingWildcard) {
    PatternBuilder body =
        block()
            .next(wideWildcard())
            .next(forLoop()
                      .condition(binOp().ops("<", "<="))
                      .body(block().next(
                          whileLoop()
                              .condition(binOp()
                                             .ops("%", "/")
                                             .lhs(varRead().bindTo("num"))
                                             .rhs(varRead().bindTo("index")))
                              .body(block()
                                        .next(wideWildcard())
                                        .next(assignment()
                                                  .lhs(varWrite().bindTo("num"))
                                                  .rhs(depthWildcard(
                                                      varRead().bindTo("index"))))
                                        .next(wideWildcard())))))
            .next(wideWildcard())
            .next(optional(returns()));
    if (trailingWildcard) body.next(wideWildcard());
    return method().bindTo("method").body(body);
}

PatternBuilder conveniencePrimeFactors() {
    return method().bindTo("method").body(
        block()
            .after(loop()
                       .condition(binOp().ops("<", "<="))
                       .body(block().next(
                           loop()
                               .condition(binOp()
                                              .ops("%", "/")
                                              .lhs(varRead().bindTo("num"))
                                              .rhs(varRead().bindTo("index")))
                               .body(block().anywhereAfter(
                                   assignment()
                                       .lhs(varWrite().bindTo("num"))
                                       .anywhereInRhs(varRead().bindTo("index")))))))
            .after(optional(returns())));
}

} // namespace

TEST_CASE("convenience spelling differs from the core spelling only at the "
          "documented expansion sites") {
    CompiledPattern conv = compile(conveniencePrimeFactors());

    // Without the trailing wildcard the only difference is the body block
    // itself (the after-mode block has one more child).
    std::vector<std::string> diffs;
    diffPaths(compile(corePrimeFactors(false)).root, conv.root, "", diffs);
    REQUIRE(diffs == std::vector<std::string>{"/1"});

    // With it spelled out, the remaining difference is the loop() expansion.
    CompiledPattern core = compile(corePrimeFactors(true));
    diffs.clear();
    diffPaths(core.root, conv.root, "", diffs);
    REQUIRE(diffs == std::vector<std::string>{"/1/1"});

    // Inside the expansion: the first oneOf alternative is the for-loop
    // variant; the inner loop() expanded the same way.
    const PatternNode& convLoop = conv.root.children[1].children[1];
    REQUIRE(convLoop.op == PatternNode::OpKind::OneOf);
    CHECK(convLoop.children.size() == 3); // condition drops for-each
    const PatternNode& coreFor = core.root.children[1].children[1];
    std::vector<std::string> innerDiffs;
    diffPaths(coreFor, convLoop.children[0], "", innerDiffs);
    REQUIRE(innerDiffs.size() == 1);
    CHECK(innerDiffs[0] == "/3/0"); // next(whileLoop) vs next(oneOf(...))
}
