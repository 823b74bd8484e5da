#pragma once

#include "algorec/source_span.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace algorec {

using NodeId = std::uint32_t;

/// Language-neutral node kinds. Constructs outside this vocabulary are kept
/// as `Other` nodes (with a label) so that scanning arbitrary files never
/// aborts; `Other` nodes can only be matched by wildcards and any().
enum class NodeKind : std::uint8_t {
    Method,
    Constructor,
    Parameter,
    Block,
    ForLoop,
    WhileLoop,
    DoWhileLoop,
    ForEachLoop,
    If,
    BinOp,
    UnaryOp,
    Assignment,
    VarDef,
    VarRead,
    VarWrite,
    MethodCall,
    Return,
    Literal,
    TypeRef,
    FieldAccess,
    ArrayAccess,
    Other,
};

const char* kindName(NodeKind kind);
NodeKind kindFromName(const std::string& name); // throws std::invalid_argument

/// Normalized AST node. Trees are built once by the front-end (or by tests)
/// and treated as immutable afterwards; matching only ever reads them.
///
/// Child layout and attributes per kind:
///   Method       attrs: name, sig(name/arity), arity, return_type?, init?(static|instance)
///                children: [Other:params [Parameter...], Block?]  (no Block for abstract)
///   Constructor  attrs: name, sig, arity     children: [Other:params [...], Block]
///   Parameter    attrs: name                 children: [TypeRef]
///   Block        children: statements
///   ForLoop      children: [Other:for_init [...], cond | Other:empty, Other:for_update [...], Block]
///   WhileLoop    children: [cond, Block]
///   DoWhileLoop  children: [cond, Block]     (condition first, like WhileLoop)
///   ForEachLoop  children: [VarDef, iterable, Block]
///   If           children: [cond, Block] or [cond, Block, Block]
///   BinOp        attrs: op                   children: [lhs, rhs]
///   UnaryOp      attrs: op, pos(prefix|postfix)   children: [operand]
///   Assignment   attrs: op ("=" after normalization)  children: [lvalue, rhs]
///   VarDef       attrs: name                 children: [TypeRef, init?]
///   VarRead      attrs: name, decl_id        children: []
///   VarWrite     attrs: name, decl_id        children: []
///   MethodCall   attrs: name, arity, sig, form(call|new), decl_id?
///                children: [receiver?, args..., Other:anon_class?]
///   Return       children: [expr?]
///   Literal      attrs: text, type           children: []
///   TypeRef      attrs: name, text           children: []
///   FieldAccess  attrs: name                 children: [receiver]
///   ArrayAccess  children: [array, index]
///   Other        label describes the construct (unit, class, params, try, switch, ...)
struct AstNode {
    NodeId id = 0;
    NodeKind kind = NodeKind::Other;
    std::string label; // only meaningful for Other nodes
    std::map<std::string, std::string> attrs;
    std::vector<AstNode> children;
    SourceSpan span;

    const std::string* attr(const std::string& key) const {
        auto it = attrs.find(key);
        return it == attrs.end() ? nullptr : &it->second;
    }
    std::string attrOr(const std::string& key, const std::string& fallback = {}) const {
        const std::string* v = attr(key);
        return v ? *v : fallback;
    }
    bool isExecutable() const; // Method/Constructor with a Block body
    const AstNode* body() const; // Block child of an executable, else nullptr
};

/// Index from node id to node for one tree. Pointers stay valid as long as
/// the tree is not mutated.
std::map<NodeId, const AstNode*> indexById(const AstNode& root);

/// Preorder walk.
template <typename F>
void forEachNode(const AstNode& node, F&& fn) {
    fn(node);
    for (const AstNode& child : node.children) {
        forEachNode(child, fn);
    }
}

/// Line-oriented indented debug dump (kind, label, attributes, span).
/// Documented for debugging only; not a stability contract.
std::string dumpTree(const AstNode& root);

/// Checks that every parent's span encloses all child spans; returns the id
/// of the first offending node, or 0 if the invariant holds.
NodeId findSpanViolation(const AstNode& root);

} // namespace algorec
