#include "algorec/pattern_builder.hpp"

namespace algorec::dsl {

using Tag = PatternBuilder::Tag;

namespace {

bool isWildcard(Tag tag) {
    return tag == Tag::WideWildcard || tag == Tag::DepthWildcard;
}

bool anyOf(Tag tag, std::initializer_list<Tag> set) {
    for (Tag t : set) {
        if (t == tag) return true;
    }
    return false;
}

} // namespace

const char* PatternBuilder::tagName() const {
    switch (tag_) {
    case Tag::Method: return "method";
    case Tag::Param: return "param";
    case Tag::Block: return "block";
    case Tag::ForLoop: return "forLoop";
    case Tag::WhileLoop: return "whileLoop";
    case Tag::DoWhileLoop: return "doWhileLoop";
    case Tag::ForEachLoop: return "forEachLoop";
    case Tag::Ite: return "ite";
    case Tag::BinOp: return "binOp";
    case Tag::UnaryOp: return "unaryOp";
    case Tag::Assignment: return "assignment";
    case Tag::VarDef: return "varDef";
    case Tag::VarRead: return "varRead";
    case Tag::VarWrite: return "varWrite";
    case Tag::MethodCall: return "methodCall";
    case Tag::Returns: return "returns";
    case Tag::Literal: return "literal";
    case Tag::TypeRef: return "typeRef";
    case Tag::FieldAccess: return "fieldAccess";
    case Tag::ArrayAccess: return "arrayAccess";
    case Tag::Any: return "any";
    case Tag::AnyType: return "anyType";
    case Tag::WideWildcard: return "wideWildcard";
    case Tag::DepthWildcard: return "depthWildcard";
    case Tag::OneOf: return "oneOf";
    case Tag::Optional: return "optional";
    case Tag::Loop: return "loop";
    case Tag::VarDefOrAss: return "varDefOrAss";
    case Tag::AnyMod: return "anyMod";
    }
    return "?";
}

void PatternBuilder::require(bool ok, const char* what) const {
    if (!ok) {
        throw DslError(std::string("InvalidConfig: ") + what + " is not applicable to " +
                       tagName() + "()");
    }
}

void PatternBuilder::setSlot(Slot& slot, PatternBuilder p, const char* slotName) {
    if (!slot.empty()) {
        throw DslError(std::string("DuplicateSlot: ") + slotName + " already set on " +
                       tagName() + "()");
    }
    slot.push_back(std::move(p));
}

PatternBuilder& PatternBuilder::bindTo(const std::string& id) {
    if (id.empty()) throw DslError("InvalidConfig: bindTo requires a nonempty id");
    require(!anyOf(tag_, {Tag::WideWildcard, Tag::DepthWildcard, Tag::OneOf,
                          Tag::Optional, Tag::Loop, Tag::VarDefOrAss, Tag::AnyMod}),
            "bindTo");
    if (binding_) throw DslError("DuplicateSlot: bindTo already set");
    binding_ = id;
    return *this;
}

PatternBuilder& PatternBuilder::ops(std::vector<std::string> symbols) {
    require(tag_ == Tag::BinOp || tag_ == Tag::UnaryOp, "ops");
    if (symbols.empty()) throw DslError("InvalidConfig: ops requires at least one symbol");
    if (!ops_.empty()) throw DslError("DuplicateSlot: ops already set");
    ops_ = std::move(symbols);
    return *this;
}

PatternBuilder& PatternBuilder::greedy() {
    require(tag_ == Tag::WideWildcard, "greedy");
    greedy_ = true;
    return *this;
}

PatternBuilder& PatternBuilder::nonGreedy() {
    require(tag_ == Tag::WideWildcard, "nonGreedy");
    greedy_ = false;
    return *this;
}

PatternBuilder& PatternBuilder::name(const std::string& value) {
    require(anyOf(tag_, {Tag::Method, Tag::MethodCall, Tag::TypeRef, Tag::FieldAccess}),
            "name");
    if (name_) throw DslError("DuplicateSlot: name already set");
    name_ = value;
    return *this;
}

PatternBuilder& PatternBuilder::arity(int value) {
    require(tag_ == Tag::Method || tag_ == Tag::MethodCall, "arity");
    if (arity_) throw DslError("DuplicateSlot: arity already set");
    arity_ = value;
    return *this;
}

PatternBuilder& PatternBuilder::text(const std::string& value) {
    require(tag_ == Tag::Literal, "text");
    if (text_) throw DslError("DuplicateSlot: text already set");
    text_ = value;
    return *this;
}

PatternBuilder& PatternBuilder::lhs(PatternBuilder p) {
    require(anyOf(tag_, {Tag::Assignment, Tag::BinOp}), "lhs");
    setSlot(lhsSlot_, std::move(p), "lhs");
    return *this;
}

PatternBuilder& PatternBuilder::rhs(PatternBuilder p) {
    require(anyOf(tag_, {Tag::Assignment, Tag::BinOp, Tag::VarDef, Tag::VarDefOrAss}),
            "rhs");
    setSlot(rhsSlot_, std::move(p), "rhs");
    return *this;
}

PatternBuilder& PatternBuilder::anywhereInLhs(PatternBuilder p) {
    require(anyOf(tag_, {Tag::Assignment, Tag::BinOp}), "anywhereInLhs");
    setSlot(lhsSlot_, depthWildcard(std::move(p)), "lhs");
    return *this;
}

PatternBuilder& PatternBuilder::anywhereInRhs(PatternBuilder p) {
    require(anyOf(tag_, {Tag::Assignment, Tag::BinOp, Tag::VarDef, Tag::VarDefOrAss}),
            "anywhereInRhs");
    setSlot(rhsSlot_, depthWildcard(std::move(p)), "rhs");
    return *this;
}

PatternBuilder& PatternBuilder::condition(PatternBuilder p) {
    require(anyOf(tag_, {Tag::ForLoop, Tag::WhileLoop, Tag::DoWhileLoop, Tag::Ite,
                         Tag::Loop}),
            "condition");
    setSlot(conditionSlot_, std::move(p), "condition");
    return *this;
}

PatternBuilder& PatternBuilder::body(PatternBuilder p) {
    require(anyOf(tag_, {Tag::Method, Tag::ForLoop, Tag::WhileLoop, Tag::DoWhileLoop,
                         Tag::ForEachLoop, Tag::Loop}),
            "body");
    setSlot(bodySlot_, std::move(p), "body");
    return *this;
}

PatternBuilder& PatternBuilder::then(PatternBuilder p) {
    require(tag_ == Tag::Ite, "then");
    setSlot(thenSlot_, std::move(p), "then");
    return *this;
}

PatternBuilder& PatternBuilder::otherwise(PatternBuilder p) {
    require(tag_ == Tag::Ite, "otherwise");
    setSlot(otherwiseSlot_, std::move(p), "otherwise");
    return *this;
}

PatternBuilder& PatternBuilder::optionalOtherwise(PatternBuilder p) {
    require(tag_ == Tag::Ite, "optionalOtherwise");
    setSlot(otherwiseSlot_, std::move(p), "otherwise");
    otherwiseOptional_ = true;
    return *this;
}

PatternBuilder& PatternBuilder::operand(PatternBuilder p) {
    require(tag_ == Tag::UnaryOp, "operand");
    setSlot(operandSlot_, std::move(p), "operand");
    return *this;
}

PatternBuilder& PatternBuilder::type(PatternBuilder p) {
    require(tag_ == Tag::VarDef || tag_ == Tag::Param, "type");
    setSlot(typeSlot_, std::move(p), "type");
    return *this;
}

PatternBuilder& PatternBuilder::anywhereInArgs(PatternBuilder p) {
    require(tag_ == Tag::MethodCall, "anywhereInArgs");
    setSlot(argsSlot_, depthWildcard(std::move(p)), "anywhereInArgs");
    return *this;
}

PatternBuilder& PatternBuilder::next(PatternBuilder p) {
    require(tag_ == Tag::Block, "next");
    if (blockBaseMode_ && *blockBaseMode_ == SeqMode::Has) {
        throw DslError("MixedOrderMode: next and has cannot be combined on one block");
    }
    blockBaseMode_ = SeqMode::Next;
    sequence_.emplace_back(SeqMode::Next, std::move(p));
    return *this;
}

PatternBuilder& PatternBuilder::has(PatternBuilder p) {
    require(tag_ == Tag::Block, "has");
    if (blockBaseMode_ && *blockBaseMode_ == SeqMode::Next) {
        throw DslError("MixedOrderMode: next and has cannot be combined on one block");
    }
    if (p.tag() == Tag::WideWildcard) {
        throw DslError("InvalidConfig: wideWildcard is meaningless in an unordered block");
    }
    blockBaseMode_ = SeqMode::Has;
    sequence_.emplace_back(SeqMode::Has, std::move(p));
    return *this;
}

PatternBuilder& PatternBuilder::after(PatternBuilder p) {
    require(tag_ == Tag::Block, "after");
    if (blockBaseMode_ && *blockBaseMode_ == SeqMode::Has) {
        throw DslError("MixedOrderMode: after belongs to the next-ordered family");
    }
    if (p.tag() == Tag::WideWildcard) {
        throw DslError("InvalidConfig: after(wideWildcard()) would nest wildcards");
    }
    blockBaseMode_ = SeqMode::Next;
    afterMode_ = true;
    sequence_.emplace_back(SeqMode::After, std::move(p));
    return *this;
}

PatternBuilder& PatternBuilder::anywhereAfter(PatternBuilder p) {
    require(tag_ == Tag::Block, "anywhereAfter");
    if (blockBaseMode_ && *blockBaseMode_ == SeqMode::Has) {
        throw DslError("MixedOrderMode: anywhereAfter belongs to the next-ordered family");
    }
    if (isWildcard(p.tag())) {
        throw DslError("InvalidConfig: anywhereAfter(wildcard) would nest wildcards");
    }
    blockBaseMode_ = SeqMode::Next;
    afterMode_ = true;
    sequence_.emplace_back(SeqMode::AnywhereAfter, std::move(p));
    return *this;
}

PatternBuilder& PatternBuilder::parameters(std::vector<PatternBuilder> ps) {
    require(tag_ == Tag::Method, "parameters");
    if (paramsSet_) throw DslError("DuplicateSlot: parameters already set");
    params_ = std::move(ps);
    paramsUnordered_ = false;
    paramsSet_ = true;
    return *this;
}

PatternBuilder& PatternBuilder::hasParameters(std::vector<PatternBuilder> ps) {
    require(tag_ == Tag::Method, "hasParameters");
    if (paramsSet_) throw DslError("DuplicateSlot: parameters already set");
    params_ = std::move(ps);
    paramsUnordered_ = true;
    paramsSet_ = true;
    return *this;
}

PatternBuilder& PatternBuilder::compareCommutative() {
    require(tag_ == Tag::BinOp, "compareCommutative");
    commutative_ = true;
    return *this;
}

PatternBuilder PatternBuilder::combinator(Tag tag, std::vector<PatternBuilder> children) {
    PatternBuilder b(tag);
    if (tag == Tag::OneOf) {
        b.alternatives_ = std::move(children);
    } else {
        b.wrapped_ = std::move(children);
    }
    return b;
}

PatternBuilder method() { return PatternBuilder(Tag::Method); }
PatternBuilder param() { return PatternBuilder(Tag::Param); }
PatternBuilder block() { return PatternBuilder(Tag::Block); }
PatternBuilder forLoop() { return PatternBuilder(Tag::ForLoop); }
PatternBuilder whileLoop() { return PatternBuilder(Tag::WhileLoop); }
PatternBuilder doWhileLoop() { return PatternBuilder(Tag::DoWhileLoop); }
PatternBuilder forEachLoop() { return PatternBuilder(Tag::ForEachLoop); }
PatternBuilder ite() { return PatternBuilder(Tag::Ite); }
PatternBuilder binOp() { return PatternBuilder(Tag::BinOp); }
PatternBuilder unaryOp() { return PatternBuilder(Tag::UnaryOp); }
PatternBuilder assignment() { return PatternBuilder(Tag::Assignment); }
PatternBuilder varDef() { return PatternBuilder(Tag::VarDef); }
PatternBuilder varRead() { return PatternBuilder(Tag::VarRead); }
PatternBuilder varWrite() { return PatternBuilder(Tag::VarWrite); }
PatternBuilder methodCall() { return PatternBuilder(Tag::MethodCall); }
PatternBuilder returns() { return PatternBuilder(Tag::Returns); }
PatternBuilder literal() { return PatternBuilder(Tag::Literal); }
PatternBuilder typeRef() { return PatternBuilder(Tag::TypeRef); }
PatternBuilder fieldAccess() { return PatternBuilder(Tag::FieldAccess); }
PatternBuilder arrayAccess() { return PatternBuilder(Tag::ArrayAccess); }
PatternBuilder any() { return PatternBuilder(Tag::Any); }
PatternBuilder anyType() { return PatternBuilder(Tag::AnyType); }
PatternBuilder wideWildcard() { return PatternBuilder(Tag::WideWildcard); }

PatternBuilder depthWildcard(PatternBuilder child) {
    if (isWildcard(child.tag())) {
        throw DslError("InvalidConfig: wildcards cannot be nested directly");
    }
    PatternBuilder b(Tag::DepthWildcard);
    b.wrapped_.push_back(std::move(child));
    return b;
}

PatternBuilder optional(PatternBuilder child) {
    PatternBuilder b(Tag::Optional);
    b.wrapped_.push_back(std::move(child));
    return b;
}

PatternBuilder oneOf(std::vector<PatternBuilder> alternatives) {
    if (alternatives.empty()) {
        throw DslError("InvalidConfig: oneOf requires at least one alternative");
    }
    return PatternBuilder::combinator(Tag::OneOf, std::move(alternatives));
}

PatternBuilder loop() { return PatternBuilder(Tag::Loop); }
PatternBuilder varDefOrAss() { return PatternBuilder(Tag::VarDefOrAss); }
PatternBuilder anyMod() { return PatternBuilder(Tag::AnyMod); }

} // namespace algorec::dsl
