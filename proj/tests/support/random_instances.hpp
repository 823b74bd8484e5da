// Randomized small instances for the brute-force oracle suite: Java method
// sources drawn from a small statement pool and search patterns drawn from a
// small builder pool. Sizes stay within the oracle's comfort zone (methods
// of at most 12 statements, patterns of at most 10 user-level constructs).
#pragma once

#include "algorec/pattern_builder.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace algorec::testsupport {

class InstanceGen {
public:
    explicit InstanceGen(std::uint32_t seed) : rng_(seed) {}

    std::string methodSource(int maxStatements = 12) {
        int count = 1 + pick(maxStatements);
        std::ostringstream out;
        out << "class G {\n    static int helper(int v) { return v; }\n";
        out << "    static void log() {}\n";
        out << "    static int gen(int a, int b) {\n";
        for (int i = 0; i < count; ++i) {
            out << "        " << statement() << "\n";
        }
        out << "        return a;\n    }\n}\n";
        return out.str();
    }

    dsl::PatternBuilder pattern(int maxItems = 10) {
        using namespace dsl;
        budget_ = 1 + pick(maxItems);
        PatternBuilder body = block();
        bool unordered = chance(0.25);
        int items = 1 + pick(3);
        for (int i = 0; i < items && budget_ > 0; ++i) {
            if (unordered) {
                body.has(item(2));
            } else {
                switch (pick(4)) {
                case 0: body.next(item(2)); break;
                case 1: body.next(wideWildcard()); break;
                case 2: body.after(item(2)); break;
                default: body.anywhereAfter(item(2)); break;
                }
            }
        }
        if (!unordered && chance(0.5)) body.next(wideWildcard());
        return method().body(body);
    }

private:
    std::string statement() {
        switch (pick(12)) {
        case 0: return "int c" + std::to_string(pick(3)) + " = 1;";
        case 1: return "a = b + 1;";
        case 2: return "a = a % b;";
        case 3: return "b = a;";
        case 4: return "helper(a);";
        case 5: return "log();";
        case 6: return "a++;";
        case 7: return "if (a < b) { a = 1; }";
        case 8: return "if (a == b) { b = a + 1; } else { a = 0; }";
        case 9: return "while (a < b) { a = a + 1; }";
        case 10: return "for (int i = 0; i < b; i++) { a = a + i; }";
        default: return "b--;";
        }
    }

    dsl::PatternBuilder item(int depth) {
        using namespace dsl;
        --budget_;
        if (depth == 0) {
            switch (pick(4)) {
            case 0: return varDef();
            case 1: return assignment();
            case 2: return methodCall();
            default: return returns();
            }
        }
        switch (pick(12)) {
        case 0: return varDef();
        case 1: {
            PatternBuilder a = assignment();
            if (chance(0.5)) a.lhs(varWrite().bindTo("v"));
            if (chance(0.5)) a.anywhereInRhs(varRead().bindTo("v"));
            return a;
        }
        case 2: {
            PatternBuilder call = methodCall();
            if (chance(0.5)) call.name(chance(0.5) ? "helper" : "log");
            return call;
        }
        case 3: {
            PatternBuilder branch = ite();
            if (chance(0.6)) {
                branch.condition(binOp().ops(chance(0.5) ? "<" : "=="));
            }
            return branch;
        }
        case 4: {
            PatternBuilder w = whileLoop();
            if (chance(0.5)) w.condition(binOp().ops("<"));
            if (chance(0.4)) w.body(block().after(assignment()));
            return w;
        }
        case 5: {
            PatternBuilder l = loop();
            if (chance(0.5)) l.condition(binOp().ops("<", "=="));
            return l;
        }
        case 6: return returns();
        case 7: --budget_; return optional(item(depth - 1));
        case 8: --budget_; return oneOf(item(depth - 1), item(depth - 1));
        case 9: return unaryOp().ops("++");
        case 10: return anyMod();
        default: return varDefOrAss();
        }
    }

    int pick(int n) {
        return static_cast<int>(
            std::uniform_int_distribution<unsigned>(0, static_cast<unsigned>(n - 1))(
                rng_));
    }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
    }

    std::mt19937 rng_;
    int budget_ = 0;
};

} // namespace algorec::testsupport
