#pragma once

#include "algorec/ast.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace algorec {

enum class ChildOrder : std::uint8_t { Ordered, Unordered };

/// Attribute predicate, kept as data so patterns are serializable.
struct AttrPredicate {
    enum class Mode : std::uint8_t { In, Equals };
    std::string attr;
    Mode mode = Mode::Equals;
    std::vector<std::string> values; // one entry for Equals

    bool holds(const AstNode& node) const;
    friend bool operator==(const AttrPredicate&, const AttrPredicate&) = default;
};

/// One node of a compiled pattern. Convenience constructs never survive
/// compilation; only these core operators do.
struct PatternNode {
    enum class OpKind : std::uint8_t {
        Kind,         // matches a concrete node kind (or a set of kinds)
        Any,          // matches any single node, including Other
        AnyType,      // matches any TypeRef
        WideWildcard, // consumes zero-to-many siblings
        DeepWildcard, // matches its child anywhere in the current subtree
        OneOf,        // exactly one alternative has to match
        Optional,     // child may be present but is not required
    };

    OpKind op = OpKind::Any;
    std::vector<NodeKind> kinds;  // Kind only; sorted
    std::string otherLabel;       // Kind with NodeKind::Other (internal groups)
    std::vector<AttrPredicate> predicates;
    ChildOrder childOrder = ChildOrder::Ordered;
    std::optional<std::string> binding;
    bool greedy = false; // wildcards only; non-greedy by default
    std::vector<PatternNode> children;
    int id = 0; // preorder index, assigned by indexPattern

    bool matchesKind(const AstNode& node) const;
};

/// Maps every binding identifier to the pattern nodes that bind or constrain
/// it. `required` lists the identifiers with at least one site outside any
/// Optional/OneOf subtree: a final matching state must have bound those.
struct BindingTable {
    std::map<std::string, std::vector<int>> sites;
    std::set<std::string> required;

    friend bool operator==(const BindingTable&, const BindingTable&) = default;
};

struct PatternOptions {
    /// Depth wildcards do not descend into nested executables unless set.
    bool deepIntoNestedExecutables = false;

    friend bool operator==(const PatternOptions&, const PatternOptions&) = default;
};

struct CompiledPattern {
    std::string name;    // catalog name or file stem; may be empty
    int version = 1;
    PatternOptions options;
    PatternNode root;
    BindingTable bindings;
};

/// Assigns preorder ids and rebuilds the binding table (also recomputing the
/// required set). Called by the compiler and the deserializer.
void indexPattern(CompiledPattern& pattern);

/// Field-by-field structural equality; children of UNORDERED nodes are
/// compared as multisets, everything else positionally. Node ids are ignored.
bool structurallyEqual(const PatternNode& a, const PatternNode& b);
bool structurallyEqual(const CompiledPattern& a, const CompiledPattern& b);

/// Renders the pattern as an indented outline with predicates and bindings.
std::string describePattern(const CompiledPattern& pattern);

/// Counts the nodes of a pattern tree.
std::size_t patternSize(const PatternNode& root);

const char* opKindName(PatternNode::OpKind op);

} // namespace algorec
