#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algorec/java_parser.hpp"

#include <filesystem>
#include <fstream>

using namespace algorec;
using namespace algorec::java;

namespace {
const std::string fixtures = ALGOREC_FIXTURES_DIR;

void writeFile(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    out << text;
}
} // namespace

TEST_CASE("worked example parses into the documented shape") {
    CompilationUnit unit = parseFile(fixtures + "/worked/GetPrimeFactors.java");
    REQUIRE(unit.entryPoints.size() == 1);
    const AstNode& method = *unit.entryPoints.front();
    CHECK(method.kind == NodeKind::Method);
    CHECK(method.attrOr("name") == "getPrimeFactors");
    CHECK(method.attrOr("sig") == "getPrimeFactors/1");
    const AstNode* body = method.body();
    REQUIRE(body != nullptr);
    REQUIRE(body->children.size() == 3);
    CHECK(body->children[0].kind == NodeKind::VarDef);
    CHECK(body->children[1].kind == NodeKind::ForLoop);
    CHECK(body->children[2].kind == NodeKind::Return);
}

TEST_CASE("empty class body yields zero entry points") {
    CompilationUnit unit = parseSource("class Empty {}", "Empty.java");
    CHECK(unit.entryPoints.empty());
}

TEST_CASE("initializer blocks and anonymous classes count as executables") {
    CompilationUnit unit = parseFile(fixtures + "/resolution/Entries.java");
    // static init, instance init, 2 constructors, plain(), Inner.concrete(),
    // anonymous(), and the anonymous Runnable.run() - the abstract method is
    // not an executable.
    CHECK(unit.entryPoints.size() == 8);
    int initializers = 0;
    for (const AstNode* entry : unit.entryPoints) {
        if (entry->attr("init")) ++initializers;
    }
    CHECK(initializers == 2);
}

TEST_CASE("parse is deterministic") {
    std::string path = fixtures + "/bubble-sort/positive/FlaggedBubble.java";
    CompilationUnit a = parseFile(path);
    CompilationUnit b = parseFile(path);
    CHECK(dumpTree(a.root) == dumpTree(b.root));
}

TEST_CASE("parent spans enclose child spans across the fixture corpus") {
    ScanResult scan = scanTree(fixtures);
    REQUIRE(scan.errors.empty());
    for (const CompilationUnit& unit : scan.units) {
        CAPTURE(unit.path);
        CHECK(findSpanViolation(unit.root) == 0);
    }
}

TEST_CASE("scanTree is deterministic and survives malformed files") {
    auto dir = std::filesystem::temp_directory_path() / "algorec_scan_test";
    std::filesystem::remove_all(dir);
    writeFile(dir / "pkg/A.java", "class A { void a() {} }");
    writeFile(dir / "pkg/B.java", "class B { void b() { while (true) } }");
    writeFile(dir / "C.java", "class C { int c() { return 1; } }");

    ScanResult scan = scanTree(dir.string());
    REQUIRE(scan.units.size() == 2);
    CHECK(scan.units[0].path.ends_with("C.java"));
    CHECK(scan.units[1].path.ends_with("A.java"));
    REQUIRE(scan.errors.size() == 1);
    CHECK(std::string(scan.errors[0].file).ends_with("B.java"));

    ScanResult again = scanTree(dir.string(), /*jobs=*/4);
    REQUIRE(again.units.size() == 2);
    CHECK(again.units[0].path == scan.units[0].path);
    std::filesystem::remove_all(dir);
}

TEST_CASE("scanTree on a missing directory raises IoError") {
    CHECK_THROWS_AS(scanTree("/nonexistent/definitely/missing"), IoError);
}

TEST_CASE("unsupported statements become Other nodes, not parse failures") {
    CompilationUnit unit = parseSource(R"(
class S {
    int pick(int x) {
        switch (x) {
            case 0: return 10;
            default: break;
        }
        try {
            x = x + 1;
        } catch (Exception e) {
            x = 0;
        } finally {
            x++;
        }
        Runnable r = () -> System.out.println(x);
        return x;
    }
}
)",
                                       "S.java");
    REQUIRE(unit.entryPoints.size() == 1);
    int others = 0;
    forEachNode(*unit.entryPoints.front(), [&](const AstNode& n) {
        if (n.kind == NodeKind::Other &&
            (n.label == "switch" || n.label == "try" || n.label == "lambda")) {
            ++others;
        }
    });
    CHECK(others == 3);
}

TEST_CASE("generics and arrays parse in declarations") {
    CompilationUnit unit = parseSource(R"(
import java.util.Map;
class G {
    Map<String, java.util.List<Integer>> index;
    int[][] grid = new int[3][3];
    <T> T pick(T[] items, int i) {
        return items[i];
    }
}
)",
                                       "G.java");
    REQUIRE(unit.entryPoints.size() == 1);
    CHECK(unit.entryPoints.front()->attrOr("sig") == "pick/2");
}

TEST_CASE("uncovered members degrade to Other nodes instead of failing the file") {
    CompilationUnit unit = parseSource(R"(
class Holder {
    @interface Marker {
        String value() default "x";
    }

    int usable() {
        return 1;
    }
}
)",
                                       "H.java");
    REQUIRE(unit.entryPoints.size() >= 1);
    bool found = false;
    for (const AstNode* entry : unit.entryPoints) {
        if (entry->attrOr("name") == "usable") found = true;
    }
    CHECK(found);
}
