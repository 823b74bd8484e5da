#include "algorec/ast_normalize.hpp"

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace algorec {

namespace {

struct Resolver {
    // Innermost scope last. Each scope maps a name to the declaring node id.
    std::vector<std::unordered_map<std::string, std::string>> scopes;
    std::unordered_map<std::string, std::string> methodSigs; // sig -> decl id

    void push() { scopes.emplace_back(); }
    void pop() { scopes.pop_back(); }
    void declare(const std::string& name, NodeId id) {
        scopes.back()[name] = std::to_string(id);
    }
    std::string lookup(const std::string& name) const {
        for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
            auto found = it->find(name);
            if (found != it->end()) return found->second;
        }
        return "ext:" + name;
    }

    void collectMethodSigs(const AstNode& node) {
        if (node.kind == NodeKind::Method || node.kind == NodeKind::Constructor) {
            const std::string* sig = node.attr("sig");
            if (sig && !methodSigs.count(*sig)) {
                methodSigs[*sig] = std::to_string(node.id);
            }
        }
        for (const AstNode& child : node.children) collectMethodSigs(child);
    }

    void declareParams(const AstNode& paramsGroup) {
        for (const AstNode& param : paramsGroup.children) {
            if (param.kind == NodeKind::Parameter) {
                declare(param.attrOr("name"), param.id);
            }
        }
    }

    bool isClass(const AstNode& n) const {
        return n.kind == NodeKind::Other &&
               (n.label == "class" || n.label == "anon_class" || n.label == "unit");
    }

    void resolve(AstNode& node) {
        switch (node.kind) {
        case NodeKind::VarRead:
        case NodeKind::VarWrite:
            node.attrs["decl_id"] = lookup(node.attrOr("name"));
            return;
        case NodeKind::MethodCall: {
            auto it = methodSigs.find(node.attrOr("sig"));
            if (it != methodSigs.end()) node.attrs["decl_id"] = it->second;
            for (AstNode& child : node.children) resolve(child);
            return;
        }
        case NodeKind::VarDef:
            for (AstNode& child : node.children) resolve(child);
            declare(node.attrOr("name"), node.id); // visible to later statements
            return;
        case NodeKind::Block:
            push();
            for (AstNode& child : node.children) resolve(child);
            pop();
            return;
        case NodeKind::Method:
        case NodeKind::Constructor:
            push();
            for (AstNode& child : node.children) {
                if (child.kind == NodeKind::Other && child.label == "params") {
                    declareParams(child);
                }
            }
            for (AstNode& child : node.children) resolve(child);
            pop();
            return;
        case NodeKind::ForLoop:
            push(); // init scope covers condition, update and body
            for (AstNode& child : node.children) resolve(child);
            pop();
            return;
        case NodeKind::ForEachLoop: {
            push();
            if (node.children.size() == 3) {
                resolve(node.children[1]); // iterable cannot see the loop var
                resolve(node.children[0]);
                resolve(node.children[2]);
            } else {
                for (AstNode& child : node.children) resolve(child);
            }
            pop();
            return;
        }
        default:
            break;
        }
        if (node.kind == NodeKind::Other) {
            if (node.label == "class" || node.label == "anon_class") {
                push(); // field scope: fields are visible before their declaration
                for (const AstNode& member : node.children) {
                    if (member.kind == NodeKind::VarDef) {
                        declare(member.attrOr("name"), member.id);
                    }
                }
                for (AstNode& member : node.children) {
                    if (member.kind == NodeKind::VarDef) {
                        // field initializers resolve against other fields
                        for (AstNode& child : member.children) resolve(child);
                    } else {
                        resolve(member);
                    }
                }
                pop();
                return;
            }
            if (node.label == "catch" || node.label == "lambda" ||
                node.label == "try" || node.label == "resources") {
                push();
                for (AstNode& child : node.children) {
                    if (child.kind == NodeKind::Parameter) {
                        declare(child.attrOr("name"), child.id);
                    }
                    if (child.kind == NodeKind::Other && child.label == "params") {
                        declareParams(child);
                    }
                }
                for (AstNode& child : node.children) {
                    if (child.kind != NodeKind::Parameter) resolve(child);
                }
                pop();
                return;
            }
        }
        for (AstNode& child : node.children) resolve(child);
    }
};

// Deep copy with fresh ids, converting a written location back to a read.
AstNode cloneAsRead(const AstNode& src, NodeId& nextId, const SourceSpan& span) {
    AstNode copy = src;
    std::function<void(AstNode&)> fix = [&](AstNode& n) {
        n.id = nextId++;
        n.span = span;
        for (AstNode& c : n.children) fix(c);
    };
    fix(copy);
    if (copy.kind == NodeKind::VarWrite) copy.kind = NodeKind::VarRead;
    return copy;
}

} // namespace

void resolveReferences(AstNode& root) {
    Resolver resolver;
    resolver.collectMethodSigs(root);
    resolver.push(); // unit scope
    resolver.resolve(root);
    resolver.pop();
}

AstNode normalizeCompoundAssignment(AstNode node, NodeId& nextId) {
    if (node.kind != NodeKind::Assignment) return node;
    std::string op = node.attrOr("op", "=");
    if (op == "=" || op.size() < 2) return node;
    std::string binOp = op.substr(0, op.size() - 1); // "+=" -> "+"

    AstNode rhs;
    rhs.id = nextId++;
    rhs.kind = NodeKind::BinOp;
    rhs.attrs["op"] = binOp;
    rhs.span = node.span;
    rhs.children.push_back(cloneAsRead(node.children.at(0), nextId, node.span));
    rhs.children.push_back(std::move(node.children.at(1)));

    node.children.resize(1);
    node.children.push_back(std::move(rhs));
    node.attrs["op"] = "=";
    return node;
}

void normalizeCompoundAssignments(AstNode& root, NodeId& nextId) {
    for (AstNode& child : root.children) normalizeCompoundAssignments(child, nextId);
    if (root.kind == NodeKind::Assignment && root.attrOr("op", "=") != "=") {
        root = normalizeCompoundAssignment(std::move(root), nextId);
    }
}

} // namespace algorec
