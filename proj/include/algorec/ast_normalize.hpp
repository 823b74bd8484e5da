#pragma once

#include "algorec/ast.hpp"

namespace algorec {

/// Resolves variable and call references in a parsed compilation unit.
///
/// After the pass every VarRead/VarWrite carries a `decl_id` attribute
/// pointing at its declaring VarDef or Parameter per Java lexical scoping
/// (fields act as an outermost method scope). Names with no visible
/// declaration get a synthetic id of the form `ext:<name>`, so textually
/// identical unresolved names still count as the same element. MethodCalls
/// to methods declared in the same unit additionally get a `decl_id`.
///
/// Idempotent: re-running yields the same attributes.
void resolveReferences(AstNode& root);

/// Expands one compound assignment (`n /= i` becomes `n = n / i`): the rhs
/// is replaced with BinOp(op, read-copy-of-lhs, original rhs). Synthesized
/// nodes take the original assignment's span and ids from `nextId`.
/// Non-compound assignments are returned unchanged.
AstNode normalizeCompoundAssignment(AstNode node, NodeId& nextId);

/// Applies normalizeCompoundAssignment to every assignment in the tree.
void normalizeCompoundAssignments(AstNode& root, NodeId& nextId);

} // namespace algorec
