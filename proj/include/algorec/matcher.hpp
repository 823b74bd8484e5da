#pragma once

#include "algorec/java_parser.hpp"
#include "algorec/pattern_tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algorec {

/// Value a binding identifier resolves to. Two sites satisfy the same
/// binding constraint iff their BoundValues compare equal: declaration
/// identity for variables and parameters, name/arity signatures for methods
/// and calls, node identity for anything else.
struct BoundValue {
    enum class Tag : std::uint8_t { Decl, Sig, Node };
    Tag tag = Tag::Node;
    std::string key;
    std::string display; // human-readable (variable or method name)

    friend bool operator==(const BoundValue& a, const BoundValue& b) {
        return a.tag == b.tag && a.key == b.key;
    }
    friend bool operator<(const BoundValue& a, const BoundValue& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        return a.key < b.key;
    }
};

BoundValue bindValueOf(const AstNode& node);

/// Immutable snapshot of an in-progress match. New states are derived,
/// never mutated in place.
struct MatchState {
    int depth = 0;
    std::vector<std::pair<int, NodeId>> mapping; // pattern node id -> AST node id
    std::vector<std::pair<std::string, BoundValue>> bindings;

    const BoundValue* binding(const std::string& id) const {
        for (const auto& [name, value] : bindings) {
            if (name == id) return &value;
        }
        return nullptr;
    }
    bool patternMapped(int patternId) const {
        for (const auto& [p, a] : mapping) {
            if (p == patternId) return true;
        }
        return false;
    }
    bool astMapped(NodeId astId) const {
        for (const auto& [p, a] : mapping) {
            if (a == astId) return true;
        }
        return false;
    }
};

/// Emitted when an entry exceeds the per-entry state budget; the entry
/// counts as unmatched.
struct MatchDiagnostic {
    std::string file;
    std::string entrySig;
    SourceSpan span;
    std::size_t budget = 0;
    std::size_t statesCreated = 0;
};

using BindingSet = std::vector<std::pair<std::string, BoundValue>>; // sorted by id

/// One successful (unified) match: raw states whose covered span coincides
/// collapse into a single result carrying the union of binding alternatives.
struct MatchResult {
    std::string patternName;
    std::string file;
    NodeId entryId = 0;
    std::string entryName;
    std::string entrySig;
    SourceSpan span; // span of the AST node matched by the pattern root
    std::vector<BindingSet> bindingAlternatives; // sorted, deduplicated
    std::size_t unifiedStateCount = 0;           // raw valid states merged
    std::vector<MatchState> rawStates;           // kept for replay validation
};

inline constexpr std::size_t kDefaultStateBudget = 1'000'000;

struct EntryOutcome {
    std::optional<MatchResult> result;
    std::optional<MatchDiagnostic> diagnostic;
    std::size_t statesCreated = 0;
};

/// Matches the pattern root against one candidate node.
EntryOutcome matchEntry(const CompiledPattern& pattern,
                        const java::CompilationUnit& unit, const AstNode& entry,
                        std::size_t budget = kDefaultStateBudget);

/// The matching step for a single pattern node: returns the derived states
/// (empty set on failure). Exposed for tests; no budget applies.
std::vector<MatchState> stepNode(const CompiledPattern& pattern,
                                 const PatternNode& node, const AstNode& target,
                                 const MatchState& state);

struct UnitMatches {
    std::vector<MatchResult> results;
    std::vector<MatchDiagnostic> diagnostics;
    std::size_t statesCreated = 0;
};

/// Runs the pattern against every candidate node of the unit (all nodes the
/// root could match; methods and constructors for method-rooted patterns).
UnitMatches matchUnit(const CompiledPattern& pattern,
                      const java::CompilationUnit& unit,
                      std::size_t budget = kDefaultStateBudget);

struct CorpusMatches {
    std::vector<MatchResult> results; // sorted by file path, then span
    std::vector<MatchDiagnostic> diagnostics;
    std::size_t statesCreated = 0;
    double wallSeconds = 0.0;
};

CorpusMatches matchCorpus(const CompiledPattern& pattern,
                          const std::vector<java::CompilationUnit>& units,
                          std::size_t budget = kDefaultStateBudget,
                          unsigned jobs = 1);

} // namespace algorec
