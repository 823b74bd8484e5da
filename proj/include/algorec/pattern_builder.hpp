#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algorec::dsl {

/// Raised for construction-time misuse: configuring a slot that does not
/// exist on the construct (InvalidConfig), setting a slot twice
/// (DuplicateSlot) or mixing next/has on one block (MixedOrderMode).
struct DslError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Fluent specification node. One builder exists per matchable Java
/// construct plus the wildcard/alternative/optional combinators; a builder
/// without configuration is maximally permissive. Builders are plain values:
/// they never inspect source code and compile to an immutable pattern tree
/// (see pattern_compiler.hpp).
class PatternBuilder {
public:
    enum class Tag {
        Method,
        Param,
        Block,
        ForLoop,
        WhileLoop,
        DoWhileLoop,
        ForEachLoop,
        Ite,
        BinOp,
        UnaryOp,
        Assignment,
        VarDef,
        VarRead,
        VarWrite,
        MethodCall,
        Returns,
        Literal,
        TypeRef,
        FieldAccess,
        ArrayAccess,
        Any,
        AnyType,
        WideWildcard,
        DepthWildcard,
        OneOf,
        Optional,
        // convenience alternatives, expanded during compilation
        Loop,
        VarDefOrAss,
        AnyMod,
    };

    /// How a child was attached to a block.
    enum class SeqMode { Next, Has, After, AnywhereAfter };

    // A slot holds zero or one sub-builder (vector sidesteps the recursive
    // type, keeps the builder copyable).
    using Slot = std::vector<PatternBuilder>;

    explicit PatternBuilder(Tag tag) : tag_(tag) {}

    // --- generic configuration ------------------------------------------------

    PatternBuilder& bindTo(const std::string& id);
    PatternBuilder& ops(std::vector<std::string> symbols);
    template <typename... S>
    PatternBuilder& ops(const char* first, S&&... rest) {
        return ops(std::vector<std::string>{first, std::string(rest)...});
    }
    PatternBuilder& greedy();
    PatternBuilder& nonGreedy();

    // predicate vocabulary: method name/arity, literal text, type name
    PatternBuilder& name(const std::string& value);
    PatternBuilder& arity(int value);
    PatternBuilder& text(const std::string& value);

    // --- slots -----------------------------------------------------------------

    PatternBuilder& lhs(PatternBuilder p);
    PatternBuilder& rhs(PatternBuilder p);
    PatternBuilder& anywhereInLhs(PatternBuilder p);
    PatternBuilder& anywhereInRhs(PatternBuilder p);
    PatternBuilder& condition(PatternBuilder p);
    PatternBuilder& body(PatternBuilder p);
    PatternBuilder& then(PatternBuilder p);
    PatternBuilder& otherwise(PatternBuilder p);
    PatternBuilder& optionalOtherwise(PatternBuilder p);
    PatternBuilder& operand(PatternBuilder p);
    PatternBuilder& type(PatternBuilder p);
    PatternBuilder& anywhereInArgs(PatternBuilder p);

    // --- block sequencing --------------------------------------------------------

    PatternBuilder& next(PatternBuilder p);
    PatternBuilder& has(PatternBuilder p);
    PatternBuilder& after(PatternBuilder p);
    PatternBuilder& anywhereAfter(PatternBuilder p);

    // --- parameters ---------------------------------------------------------------

    PatternBuilder& parameters(std::vector<PatternBuilder> ps);
    PatternBuilder& hasParameters(std::vector<PatternBuilder> ps);
    template <typename... B>
    PatternBuilder& hasParameters(PatternBuilder first, B&&... rest) {
        return hasParameters(
            std::vector<PatternBuilder>{std::move(first), std::forward<B>(rest)...});
    }
    PatternBuilder& compareCommutative();

    // --- introspection (compiler and tests) -----------------------------------------

    Tag tag() const { return tag_; }
    const std::optional<std::string>& bindingId() const { return binding_; }
    const std::vector<std::string>& opSymbols() const { return ops_; }
    const std::optional<std::string>& namePredicate() const { return name_; }
    const std::optional<int>& arityPredicate() const { return arity_; }
    const std::optional<std::string>& textPredicate() const { return text_; }
    bool isGreedy() const { return greedy_; }
    bool isCommutative() const { return commutative_; }
    const Slot& lhsSlot() const { return lhsSlot_; }
    const Slot& rhsSlot() const { return rhsSlot_; }
    const Slot& conditionSlot() const { return conditionSlot_; }
    const Slot& bodySlot() const { return bodySlot_; }
    const Slot& thenSlot() const { return thenSlot_; }
    const Slot& otherwiseSlot() const { return otherwiseSlot_; }
    bool otherwiseIsOptional() const { return otherwiseOptional_; }
    const Slot& operandSlot() const { return operandSlot_; }
    const Slot& typeSlot() const { return typeSlot_; }
    const Slot& argsSlot() const { return argsSlot_; }
    const std::vector<std::pair<SeqMode, PatternBuilder>>& sequence() const {
        return sequence_;
    }
    std::vector<std::pair<SeqMode, PatternBuilder>>& sequence() { return sequence_; }
    const std::vector<PatternBuilder>& alternatives() const { return alternatives_; }
    const std::vector<PatternBuilder>& params() const { return params_; }
    bool paramsUnordered() const { return paramsUnordered_; }
    bool hasParams() const { return paramsSet_; }
    const Slot& wrapped() const { return wrapped_; } // depthWildcard/optional child

    static PatternBuilder combinator(Tag tag, std::vector<PatternBuilder> children);

private:
    friend PatternBuilder depthWildcard(PatternBuilder);
    friend PatternBuilder optional(PatternBuilder);

    void require(bool ok, const char* what) const;
    void setSlot(Slot& slot, PatternBuilder p, const char* slotName);
    const char* tagName() const;

    Tag tag_;
    std::optional<std::string> binding_;
    std::vector<std::string> ops_;
    std::optional<std::string> name_;
    std::optional<int> arity_;
    std::optional<std::string> text_;
    bool greedy_ = false;
    bool commutative_ = false;
    Slot lhsSlot_, rhsSlot_, conditionSlot_, bodySlot_, thenSlot_, otherwiseSlot_;
    Slot operandSlot_, typeSlot_, argsSlot_;
    bool otherwiseOptional_ = false;
    std::vector<std::pair<SeqMode, PatternBuilder>> sequence_; // block children
    std::optional<SeqMode> blockBaseMode_; // Next or Has once fixed
    bool afterMode_ = false;
    std::vector<PatternBuilder> alternatives_; // oneOf
    std::vector<PatternBuilder> params_;
    bool paramsUnordered_ = false;
    bool paramsSet_ = false;
    Slot wrapped_;

public:
    bool afterMode() const { return afterMode_; }
};

// --- core constructors ---------------------------------------------------------

PatternBuilder method();
PatternBuilder param();
PatternBuilder block();
PatternBuilder forLoop();
PatternBuilder whileLoop();
PatternBuilder doWhileLoop();
PatternBuilder forEachLoop();
PatternBuilder ite();
PatternBuilder binOp();
PatternBuilder unaryOp();
PatternBuilder assignment();
PatternBuilder varDef();
PatternBuilder varRead();
PatternBuilder varWrite();
PatternBuilder methodCall();
PatternBuilder returns();
PatternBuilder literal();
PatternBuilder typeRef();
PatternBuilder fieldAccess();
PatternBuilder arrayAccess();
PatternBuilder any();
PatternBuilder anyType();
PatternBuilder wideWildcard();
PatternBuilder depthWildcard(PatternBuilder child);
PatternBuilder optional(PatternBuilder child);
PatternBuilder oneOf(std::vector<PatternBuilder> alternatives);
template <typename... B>
PatternBuilder oneOf(PatternBuilder first, B&&... rest) {
    return oneOf(std::vector<PatternBuilder>{std::move(first), std::forward<B>(rest)...});
}

// --- convenience alternatives -------------------------------------------------------

/// Matches all Java loop kinds; expands to oneOf(forLoop, whileLoop,
/// doWhileLoop, forEachLoop). A configured condition drops the for-each
/// alternative (it has no condition slot).
PatternBuilder loop();
/// oneOf(varDef, assignment); slot configuration distributes to both.
PatternBuilder varDefOrAss();
/// The typical ways to modify a variable: oneOf(assignment,
/// unaryOp ops ++, unaryOp ops --); pre/post forms share the op symbol.
PatternBuilder anyMod();

} // namespace algorec::dsl
