#pragma once

#include "algorec/pattern_builder.hpp"
#include "algorec/pattern_tree.hpp"

#include <stdexcept>

namespace algorec {

struct CompileError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Transforms a builder specification into the low-level pattern tree used
/// by the matcher: convenience constructs expand to core primitives,
/// configuration becomes attribute predicates, bindings are registered and
/// the child matching order is fixed. Pure and deterministic.
///
/// Expansion rules (all tested for structural equality):
///   block().after(x)          -> ..., wideWildcard, x   (+ one trailing
///                                wideWildcard appended to after-mode blocks,
///                                so suffix statements stay permitted)
///   block().anywhereAfter(x)  -> ..., wideWildcard, depthWildcard(x) (same
///                                trailing rule)
///   a.anywhereInRhs(p)        -> rhs slot = depthWildcard(p)
///   b.anywhereInLhs(p)        -> lhs slot = depthWildcard(p)
///   loop()                    -> oneOf(forLoop, whileLoop, doWhileLoop,
///                                forEachLoop); a configured condition drops
///                                the for-each alternative
///   varDefOrAss()             -> oneOf(varDef, assignment), slots distributed
///   anyMod()                  -> oneOf(assignment, unaryOp ops ++,
///                                unaryOp ops --)
///   ite().optionalOtherwise(s)-> otherwise slot = optional(block().after(s))
///   .condition(p)             -> condition slot = depthWildcard(p); the
///                                pattern may match the condition or any
///                                subexpression of it (binOp().ops("%")
///                                matches the condition `n % i == 0`)
///   method().hasParameters(ps)-> UNORDERED parameter group (extra parameters
///                                are permitted by unordered matching)
///   binOp().compareCommutative() -> child order UNORDERED
///
/// Unfilled required slots compile to any(); genuinely optional slots (else
/// branch, method body, variable initializer) compile to optional(any()) so
/// the corresponding AST child may be absent.
CompiledPattern compile(const dsl::PatternBuilder& root,
                        PatternOptions options = {});

} // namespace algorec
