#include "algorec/pattern_compiler.hpp"

#include <algorithm>

namespace algorec {

namespace {

using dsl::PatternBuilder;
using Tag = PatternBuilder::Tag;
using SeqMode = PatternBuilder::SeqMode;
using OpKind = PatternNode::OpKind;

PatternNode compileNode(const PatternBuilder& b);

PatternNode kindNode(NodeKind kind) {
    PatternNode node;
    node.op = OpKind::Kind;
    node.kinds = {kind};
    return node;
}

PatternNode anyNode() {
    PatternNode node;
    node.op = OpKind::Any;
    return node;
}

PatternNode optionalAny() {
    PatternNode node;
    node.op = OpKind::Optional;
    node.children.push_back(anyNode());
    return node;
}

PatternNode wideNode(bool greedy = false) {
    PatternNode node;
    node.op = OpKind::WideWildcard;
    node.greedy = greedy;
    return node;
}

PatternNode deepNode(PatternNode child) {
    PatternNode node;
    node.op = OpKind::DeepWildcard;
    node.children.push_back(std::move(child));
    return node;
}

void addEq(PatternNode& node, const std::string& attr, const std::string& value) {
    node.predicates.push_back(
        {attr, AttrPredicate::Mode::Equals, {value}});
}

void addIn(PatternNode& node, const std::string& attr,
           const std::vector<std::string>& values) {
    node.predicates.push_back({attr, AttrPredicate::Mode::In, values});
}

PatternNode compileSlot(const PatternBuilder::Slot& slot) {
    if (slot.empty()) return anyNode();
    return compileNode(slot.front());
}

void applyCommon(PatternNode& node, const PatternBuilder& b) {
    if (b.bindingId()) node.binding = *b.bindingId();
    if (!b.opSymbols().empty()) addIn(node, "op", b.opSymbols());
    if (b.namePredicate()) addEq(node, "name", *b.namePredicate());
    if (b.arityPredicate()) addEq(node, "arity", std::to_string(*b.arityPredicate()));
    if (b.textPredicate()) addEq(node, "text", *b.textPredicate());
}

PatternNode compileMethod(const PatternBuilder& b) {
    PatternNode node;
    node.op = OpKind::Kind;
    node.kinds = {NodeKind::Method, NodeKind::Constructor};
    applyCommon(node, b);
    if (b.hasParams() || !b.bodySlot().empty()) {
        PatternNode params;
        if (b.hasParams()) {
            params.op = OpKind::Kind;
            params.kinds = {NodeKind::Other};
            params.otherLabel = "params";
            params.childOrder =
                b.paramsUnordered() ? ChildOrder::Unordered : ChildOrder::Ordered;
            for (const PatternBuilder& p : b.params()) {
                params.children.push_back(compileNode(p));
            }
        } else {
            params = anyNode();
        }
        node.children.push_back(std::move(params));
        node.children.push_back(b.bodySlot().empty() ? optionalAny()
                                                     : compileNode(b.bodySlot().front()));
    }
    return node;
}

PatternNode compileBlock(const PatternBuilder& b) {
    PatternNode node = kindNode(NodeKind::Block);
    applyCommon(node, b);
    bool unordered = false;
    for (const auto& [mode, child] : b.sequence()) {
        switch (mode) {
        case SeqMode::Next:
            node.children.push_back(compileNode(child));
            break;
        case SeqMode::Has:
            unordered = true;
            node.children.push_back(compileNode(child));
            break;
        case SeqMode::After:
            node.children.push_back(wideNode());
            node.children.push_back(compileNode(child));
            break;
        case SeqMode::AnywhereAfter:
            node.children.push_back(wideNode());
            node.children.push_back(deepNode(compileNode(child)));
            break;
        }
    }
    if (b.afterMode()) node.children.push_back(wideNode());
    node.childOrder = unordered ? ChildOrder::Unordered : ChildOrder::Ordered;
    if (unordered) {
        for (const PatternNode& child : node.children) {
            if (child.op == OpKind::WideWildcard) {
                throw CompileError("wideWildcard inside an unordered block");
            }
        }
    }
    return node;
}

// A configured condition compiles to depthWildcard(cond): the pattern may
// match the condition expression or any subexpression of it, so a while
// condition like `n % i == 0` is matched by binOp().ops("%").
PatternNode conditionSlot(const PatternNode& cond) { return deepNode(cond); }

PatternNode compileLoopKind(NodeKind kind, const PatternNode* cond,
                            const PatternNode* body) {
    PatternNode node = kindNode(kind);
    if (!cond && !body) return node;
    switch (kind) {
    case NodeKind::ForLoop:
        node.children.push_back(anyNode()); // init
        node.children.push_back(cond ? conditionSlot(*cond) : anyNode());
        node.children.push_back(anyNode()); // update
        node.children.push_back(body ? *body : anyNode());
        break;
    case NodeKind::WhileLoop:
    case NodeKind::DoWhileLoop:
        node.children.push_back(cond ? conditionSlot(*cond) : anyNode());
        node.children.push_back(body ? *body : anyNode());
        break;
    case NodeKind::ForEachLoop:
        node.children.push_back(anyNode()); // loop variable
        node.children.push_back(anyNode()); // iterable
        node.children.push_back(body ? *body : anyNode());
        break;
    default:
        throw CompileError("not a loop kind");
    }
    return node;
}

PatternNode compileLoopAlternatives(const PatternBuilder& b) {
    PatternNode cond, body;
    const PatternNode* condPtr = nullptr;
    const PatternNode* bodyPtr = nullptr;
    if (!b.conditionSlot().empty()) {
        cond = compileNode(b.conditionSlot().front());
        condPtr = &cond;
    }
    if (!b.bodySlot().empty()) {
        body = compileNode(b.bodySlot().front());
        bodyPtr = &body;
    }
    PatternNode node;
    node.op = OpKind::OneOf;
    node.children.push_back(compileLoopKind(NodeKind::ForLoop, condPtr, bodyPtr));
    node.children.push_back(compileLoopKind(NodeKind::WhileLoop, condPtr, bodyPtr));
    node.children.push_back(compileLoopKind(NodeKind::DoWhileLoop, condPtr, bodyPtr));
    if (!condPtr) { // a for-each loop has no condition slot
        node.children.push_back(
            compileLoopKind(NodeKind::ForEachLoop, nullptr, bodyPtr));
    }
    return node;
}

PatternNode compileVarDefOrAss(const PatternBuilder& b) {
    PatternNode node;
    node.op = OpKind::OneOf;

    PatternNode def = kindNode(NodeKind::VarDef);
    PatternNode ass = kindNode(NodeKind::Assignment);
    if (!b.rhsSlot().empty()) {
        PatternNode rhs = compileNode(b.rhsSlot().front());
        def.children.push_back(anyNode()); // type
        def.children.push_back(rhs);
        ass.children.push_back(anyNode()); // lvalue
        ass.children.push_back(std::move(rhs));
    }
    node.children.push_back(std::move(def));
    node.children.push_back(std::move(ass));
    return node;
}

PatternNode compileAnyMod() {
    PatternNode node;
    node.op = OpKind::OneOf;
    node.children.push_back(kindNode(NodeKind::Assignment));
    PatternNode inc = kindNode(NodeKind::UnaryOp);
    addIn(inc, "op", {"++"});
    PatternNode dec = kindNode(NodeKind::UnaryOp);
    addIn(dec, "op", {"--"});
    node.children.push_back(std::move(inc));
    node.children.push_back(std::move(dec));
    return node;
}

PatternNode compileIte(const PatternBuilder& b) {
    PatternNode node = kindNode(NodeKind::If);
    applyCommon(node, b);
    bool anySlot = !b.conditionSlot().empty() || !b.thenSlot().empty() ||
                   !b.otherwiseSlot().empty();
    if (!anySlot) return node;
    node.children.push_back(b.conditionSlot().empty()
                                ? anyNode()
                                : conditionSlot(compileNode(b.conditionSlot().front())));
    node.children.push_back(compileSlot(b.thenSlot()));
    if (b.otherwiseSlot().empty()) {
        node.children.push_back(optionalAny());
    } else if (b.otherwiseIsOptional()) {
        // optionalOtherwise(s) == otherwise(optional(block().after(s)))
        PatternNode blockNode = kindNode(NodeKind::Block);
        blockNode.children.push_back(wideNode());
        blockNode.children.push_back(compileNode(b.otherwiseSlot().front()));
        blockNode.children.push_back(wideNode());
        PatternNode opt;
        opt.op = OpKind::Optional;
        opt.children.push_back(std::move(blockNode));
        node.children.push_back(std::move(opt));
    } else {
        node.children.push_back(compileNode(b.otherwiseSlot().front()));
    }
    return node;
}

PatternNode compileNode(const PatternBuilder& b) {
    switch (b.tag()) {
    case Tag::Method:
        return compileMethod(b);
    case Tag::Param: {
        PatternNode node = kindNode(NodeKind::Parameter);
        applyCommon(node, b);
        if (!b.typeSlot().empty()) {
            node.children.push_back(compileNode(b.typeSlot().front()));
        }
        return node;
    }
    case Tag::Block:
        return compileBlock(b);
    case Tag::ForLoop:
    case Tag::WhileLoop:
    case Tag::DoWhileLoop:
    case Tag::ForEachLoop: {
        NodeKind kind = b.tag() == Tag::ForLoop        ? NodeKind::ForLoop
                        : b.tag() == Tag::WhileLoop    ? NodeKind::WhileLoop
                        : b.tag() == Tag::DoWhileLoop  ? NodeKind::DoWhileLoop
                                                       : NodeKind::ForEachLoop;
        PatternNode cond, body;
        const PatternNode* condPtr = nullptr;
        const PatternNode* bodyPtr = nullptr;
        if (!b.conditionSlot().empty()) {
            cond = compileNode(b.conditionSlot().front());
            condPtr = &cond;
        }
        if (!b.bodySlot().empty()) {
            body = compileNode(b.bodySlot().front());
            bodyPtr = &body;
        }
        PatternNode node = compileLoopKind(kind, condPtr, bodyPtr);
        applyCommon(node, b);
        return node;
    }
    case Tag::Ite:
        return compileIte(b);
    case Tag::BinOp: {
        PatternNode node = kindNode(NodeKind::BinOp);
        applyCommon(node, b);
        if (b.isCommutative()) node.childOrder = ChildOrder::Unordered;
        if (!b.lhsSlot().empty() || !b.rhsSlot().empty()) {
            node.children.push_back(compileSlot(b.lhsSlot()));
            node.children.push_back(compileSlot(b.rhsSlot()));
        }
        return node;
    }
    case Tag::UnaryOp: {
        PatternNode node = kindNode(NodeKind::UnaryOp);
        applyCommon(node, b);
        if (!b.operandSlot().empty()) {
            node.children.push_back(compileNode(b.operandSlot().front()));
        }
        return node;
    }
    case Tag::Assignment: {
        PatternNode node = kindNode(NodeKind::Assignment);
        applyCommon(node, b);
        if (!b.lhsSlot().empty() || !b.rhsSlot().empty()) {
            node.children.push_back(compileSlot(b.lhsSlot()));
            node.children.push_back(compileSlot(b.rhsSlot()));
        }
        return node;
    }
    case Tag::VarDef: {
        PatternNode node = kindNode(NodeKind::VarDef);
        applyCommon(node, b);
        if (!b.typeSlot().empty() || !b.rhsSlot().empty()) {
            node.children.push_back(compileSlot(b.typeSlot()));
            node.children.push_back(b.rhsSlot().empty()
                                        ? optionalAny()
                                        : compileNode(b.rhsSlot().front()));
        }
        return node;
    }
    case Tag::VarRead: {
        PatternNode node = kindNode(NodeKind::VarRead);
        applyCommon(node, b);
        return node;
    }
    case Tag::VarWrite: {
        PatternNode node = kindNode(NodeKind::VarWrite);
        applyCommon(node, b);
        return node;
    }
    case Tag::MethodCall: {
        PatternNode node = kindNode(NodeKind::MethodCall);
        applyCommon(node, b);
        if (!b.argsSlot().empty()) {
            node.children.push_back(wideNode());
            node.children.push_back(compileNode(b.argsSlot().front()));
            node.children.push_back(wideNode());
        }
        return node;
    }
    case Tag::Returns: {
        PatternNode node = kindNode(NodeKind::Return);
        applyCommon(node, b);
        return node;
    }
    case Tag::Literal: {
        PatternNode node = kindNode(NodeKind::Literal);
        applyCommon(node, b);
        return node;
    }
    case Tag::TypeRef: {
        PatternNode node = kindNode(NodeKind::TypeRef);
        applyCommon(node, b);
        return node;
    }
    case Tag::FieldAccess: {
        PatternNode node = kindNode(NodeKind::FieldAccess);
        applyCommon(node, b);
        return node;
    }
    case Tag::ArrayAccess: {
        PatternNode node = kindNode(NodeKind::ArrayAccess);
        applyCommon(node, b);
        return node;
    }
    case Tag::Any: {
        PatternNode node;
        node.op = OpKind::Any;
        if (b.bindingId()) node.binding = *b.bindingId();
        return node;
    }
    case Tag::AnyType: {
        PatternNode node;
        node.op = OpKind::AnyType;
        if (b.bindingId()) node.binding = *b.bindingId();
        return node;
    }
    case Tag::WideWildcard:
        return wideNode(b.isGreedy());
    case Tag::DepthWildcard: {
        if (b.wrapped().empty()) {
            throw CompileError("depthWildcard requires exactly one child");
        }
        return deepNode(compileNode(b.wrapped().front()));
    }
    case Tag::OneOf: {
        if (b.alternatives().empty()) {
            throw CompileError("oneOf requires at least one alternative");
        }
        PatternNode node;
        node.op = OpKind::OneOf;
        for (const PatternBuilder& alt : b.alternatives()) {
            node.children.push_back(compileNode(alt));
        }
        return node;
    }
    case Tag::Optional: {
        if (b.wrapped().empty()) {
            throw CompileError("optional requires exactly one child");
        }
        PatternNode node;
        node.op = OpKind::Optional;
        node.children.push_back(compileNode(b.wrapped().front()));
        return node;
    }
    case Tag::Loop:
        return compileLoopAlternatives(b);
    case Tag::VarDefOrAss:
        return compileVarDefOrAss(b);
    case Tag::AnyMod:
        return compileAnyMod();
    }
    throw CompileError("unhandled builder tag");
}

} // namespace

CompiledPattern compile(const dsl::PatternBuilder& root, PatternOptions options) {
    CompiledPattern pattern;
    pattern.options = options;
    pattern.root = compileNode(root);
    indexPattern(pattern);
    return pattern;
}

} // namespace algorec
