#include "algorec/pattern_tree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace algorec {

bool AttrPredicate::holds(const AstNode& node) const {
    const std::string* value = node.attr(attr);
    if (!value) return false;
    return std::find(values.begin(), values.end(), *value) != values.end();
}

bool PatternNode::matchesKind(const AstNode& node) const {
    if (std::find(kinds.begin(), kinds.end(), node.kind) == kinds.end()) {
        return false;
    }
    if (node.kind == NodeKind::Other && node.label != otherLabel) return false;
    return true;
}

namespace {

void assignIds(PatternNode& node, int& next) {
    node.id = next++;
    for (PatternNode& child : node.children) assignIds(child, next);
}

void collectBindings(const PatternNode& node, bool conditional, BindingTable& table) {
    if (node.binding) {
        table.sites[*node.binding].push_back(node.id);
        if (!conditional) table.required.insert(*node.binding);
    }
    bool childConditional =
        conditional || node.op == PatternNode::OpKind::OneOf ||
        node.op == PatternNode::OpKind::Optional;
    for (const PatternNode& child : node.children) {
        collectBindings(child, childConditional, table);
    }
}

} // namespace

void indexPattern(CompiledPattern& pattern) {
    int next = 1;
    assignIds(pattern.root, next);
    pattern.bindings = BindingTable{};
    collectBindings(pattern.root, false, pattern.bindings);
}

namespace {

bool nodeFieldsEqual(const PatternNode& a, const PatternNode& b) {
    return a.op == b.op && a.kinds == b.kinds && a.otherLabel == b.otherLabel &&
           a.predicates == b.predicates && a.childOrder == b.childOrder &&
           a.binding == b.binding && a.greedy == b.greedy &&
           a.children.size() == b.children.size();
}

bool childrenEqualAsMultiset(const PatternNode& a, const PatternNode& b) {
    std::vector<bool> used(b.children.size(), false);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == a.children.size()) return true;
        for (std::size_t j = 0; j < b.children.size(); ++j) {
            if (used[j] || !structurallyEqual(a.children[i], b.children[j])) continue;
            used[j] = true;
            if (assign(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return assign(0);
}

} // namespace

bool structurallyEqual(const PatternNode& a, const PatternNode& b) {
    if (!nodeFieldsEqual(a, b)) return false;
    if (a.childOrder == ChildOrder::Unordered) {
        return childrenEqualAsMultiset(a, b);
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!structurallyEqual(a.children[i], b.children[i])) return false;
    }
    return true;
}

bool structurallyEqual(const CompiledPattern& a, const CompiledPattern& b) {
    return a.options == b.options && structurallyEqual(a.root, b.root);
}

const char* opKindName(PatternNode::OpKind op) {
    switch (op) {
    case PatternNode::OpKind::Kind: return "kind";
    case PatternNode::OpKind::Any: return "any";
    case PatternNode::OpKind::AnyType: return "anyType";
    case PatternNode::OpKind::WideWildcard: return "wideWildcard";
    case PatternNode::OpKind::DeepWildcard: return "depthWildcard";
    case PatternNode::OpKind::OneOf: return "oneOf";
    case PatternNode::OpKind::Optional: return "optional";
    }
    return "?";
}

namespace {

std::string kindListName(const PatternNode& node) {
    if (node.kinds.size() == 2 && node.kinds[0] == NodeKind::Method &&
        node.kinds[1] == NodeKind::Constructor) {
        return "method";
    }
    std::string out;
    for (std::size_t i = 0; i < node.kinds.size(); ++i) {
        if (i) out += "|";
        out += kindName(node.kinds[i]);
        if (node.kinds[i] == NodeKind::Other) out += ":" + node.otherLabel;
    }
    return out;
}

void describeNode(const PatternNode& node, int depth, std::ostringstream& out) {
    for (int i = 0; i < depth; ++i) out << "  ";
    switch (node.op) {
    case PatternNode::OpKind::Kind: out << kindListName(node); break;
    case PatternNode::OpKind::Any: out << "any"; break;
    case PatternNode::OpKind::AnyType: out << "anyType"; break;
    case PatternNode::OpKind::WideWildcard:
        out << (node.greedy ? "wideWildcard (greedy)" : "wideWildcard");
        break;
    case PatternNode::OpKind::DeepWildcard: out << "depthWildcard"; break;
    case PatternNode::OpKind::OneOf: out << "oneOf"; break;
    case PatternNode::OpKind::Optional: out << "optional"; break;
    }
    for (const AttrPredicate& pred : node.predicates) {
        out << " " << pred.attr << (pred.mode == AttrPredicate::Mode::In ? " ∈ {" : " = ");
        for (std::size_t i = 0; i < pred.values.size(); ++i) {
            if (i) out << ", ";
            out << pred.values[i];
        }
        if (pred.mode == AttrPredicate::Mode::In) out << "}";
    }
    if (node.childOrder == ChildOrder::Unordered) out << " [unordered]";
    if (node.binding) out << " [bind: " << *node.binding << "]";
    out << "\n";
    for (const PatternNode& child : node.children) {
        describeNode(child, depth + 1, out);
    }
}

} // namespace

std::string describePattern(const CompiledPattern& pattern) {
    std::ostringstream out;
    if (!pattern.name.empty()) {
        out << pattern.name << " (v" << pattern.version << ")\n";
    }
    describeNode(pattern.root, 0, out);
    return out.str();
}

std::size_t patternSize(const PatternNode& root) {
    std::size_t n = 1;
    for (const PatternNode& child : root.children) n += patternSize(child);
    return n;
}

} // namespace algorec
