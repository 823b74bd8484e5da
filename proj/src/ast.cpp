#include "algorec/ast.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace algorec {

namespace {

constexpr std::array<const char*, 22> kKindNames = {
    "Method",      "Constructor", "Parameter",  "Block",      "ForLoop",
    "WhileLoop",   "DoWhileLoop", "ForEachLoop", "If",        "BinOp",
    "UnaryOp",     "Assignment",  "VarDef",     "VarRead",    "VarWrite",
    "MethodCall",  "Return",      "Literal",    "TypeRef",    "FieldAccess",
    "ArrayAccess", "Other",
};

} // namespace

const char* kindName(NodeKind kind) {
    return kKindNames[static_cast<std::size_t>(kind)];
}

NodeKind kindFromName(const std::string& name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (name == kKindNames[i]) return static_cast<NodeKind>(i);
    }
    throw std::invalid_argument("unknown node kind: " + name);
}

std::string to_string(const SourceSpan& span) {
    std::ostringstream out;
    if (span.file) out << *span.file << ":";
    out << span.startLine << ":" << span.startCol << "-" << span.endLine << ":"
        << span.endCol;
    return out.str();
}

bool AstNode::isExecutable() const {
    return (kind == NodeKind::Method || kind == NodeKind::Constructor) &&
           body() != nullptr;
}

const AstNode* AstNode::body() const {
    if (kind != NodeKind::Method && kind != NodeKind::Constructor) return nullptr;
    for (const AstNode& child : children) {
        if (child.kind == NodeKind::Block) return &child;
    }
    return nullptr;
}

std::map<NodeId, const AstNode*> indexById(const AstNode& root) {
    std::map<NodeId, const AstNode*> index;
    forEachNode(root, [&](const AstNode& node) { index.emplace(node.id, &node); });
    return index;
}

namespace {

void dumpNode(const AstNode& node, int depth, std::ostringstream& out) {
    for (int i = 0; i < depth; ++i) out << "  ";
    out << kindName(node.kind);
    if (node.kind == NodeKind::Other && !node.label.empty()) out << ":" << node.label;
    out << " #" << node.id;
    for (const auto& [key, value] : node.attrs) {
        out << " " << key << "=" << value;
    }
    out << " @" << node.span.startLine << ":" << node.span.startCol << "-"
        << node.span.endLine << ":" << node.span.endCol << "\n";
    for (const AstNode& child : node.children) {
        dumpNode(child, depth + 1, out);
    }
}

} // namespace

std::string dumpTree(const AstNode& root) {
    std::ostringstream out;
    dumpNode(root, 0, out);
    return out.str();
}

NodeId findSpanViolation(const AstNode& root) {
    for (const AstNode& child : root.children) {
        if (child.span.valid() && root.span.valid() &&
            !root.span.encloses(child.span)) {
            return child.id;
        }
        if (NodeId bad = findSpanViolation(child); bad != 0) return bad;
    }
    return 0;
}

} // namespace algorec
