#include "algorec/matcher.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace algorec {

namespace {

using OpKind = PatternNode::OpKind;

struct BudgetExceeded {
    std::size_t statesCreated;
};

struct Engine {
    const CompiledPattern& pattern;
    std::size_t budget;
    std::size_t statesCreated = 0;

    Engine(const CompiledPattern& p, std::size_t b) : pattern(p), budget(b) {}

    MatchState derive(const MatchState& base) {
        if (++statesCreated > budget) throw BudgetExceeded{statesCreated};
        return base;
    }

    // --- single node matching -------------------------------------------------

    std::vector<MatchState> matchNode(const PatternNode& p, const AstNode& n,
                                      const MatchState& state) {
        switch (p.op) {
        case OpKind::Kind:
            if (!p.matchesKind(n)) return {};
            break;
        case OpKind::Any:
            break;
        case OpKind::AnyType:
            if (n.kind != NodeKind::TypeRef) return {};
            break;
        case OpKind::OneOf: {
            std::vector<MatchState> out;
            for (const PatternNode& alt : p.children) {
                append(out, matchNode(alt, n, state));
            }
            return out;
        }
        case OpKind::Optional: {
            std::vector<MatchState> out = matchNode(p.children.front(), n, state);
            out.push_back(derive(state)); // not taking the optional is also valid
            return out;
        }
        case OpKind::DeepWildcard: {
            std::vector<MatchState> out;
            deepLandings(p.children.front(), n, state, /*isStart=*/true, out);
            return out;
        }
        case OpKind::WideWildcard:
            return {}; // only meaningful inside a sibling list
        }

        for (const AttrPredicate& pred : p.predicates) {
            if (!pred.holds(n)) return {};
        }
        if (state.patternMapped(p.id) || state.astMapped(n.id)) return {};

        bool rememberBinding = false;
        BoundValue value;
        if (p.binding) {
            value = bindValueOf(n);
            if (const BoundValue* existing = state.binding(*p.binding)) {
                if (!(*existing == value)) return {}; // binding clash
            } else {
                rememberBinding = true;
            }
        }
        MatchState next = derive(state);
        next.mapping.emplace_back(p.id, n.id);
        if (rememberBinding) {
            next.bindings.emplace_back(*p.binding, std::move(value));
        }
        if (p.children.empty()) return {std::move(next)};

        ++next.depth;
        if (p.childOrder == ChildOrder::Unordered) {
            return matchUnordered(p.children, n.children, next);
        }
        return matchSequence(p.children, 0, n.children, 0, next);
    }

    // Enumerates landing sites for a depth wildcard: the start node and all
    // descendants, skipping nested executables unless enabled.
    void deepLandings(const PatternNode& child, const AstNode& n,
                      const MatchState& state, bool isStart,
                      std::vector<MatchState>& out) {
        MatchState landed = state;
        ++landed.depth;
        append(out, matchNode(child, n, landed));
        bool isNestedExecutable =
            !isStart &&
            (n.kind == NodeKind::Method || n.kind == NodeKind::Constructor);
        if (isNestedExecutable && !pattern.options.deepIntoNestedExecutables) {
            return;
        }
        for (const AstNode& sub : n.children) {
            deepLandings(child, sub, state, false, out);
        }
    }

    // --- ordered sibling matching ------------------------------------------------

    // Matches one non-wide pattern item at position `ai`, returning derived
    // states with the number of AST children consumed (0 or 1).
    std::vector<std::pair<MatchState, int>> matchItem(
        const PatternNode& p, const std::vector<AstNode>& siblings, std::size_t ai,
        const MatchState& state) {
        std::vector<std::pair<MatchState, int>> out;
        switch (p.op) {
        case OpKind::Optional: {
            for (auto& [s, consumed] : matchItem(p.children.front(), siblings, ai, state)) {
                out.emplace_back(std::move(s), consumed);
            }
            out.emplace_back(derive(state), 0);
            return out;
        }
        case OpKind::OneOf: {
            for (const PatternNode& alt : p.children) {
                for (auto& item : matchItem(alt, siblings, ai, state)) {
                    out.push_back(std::move(item));
                }
            }
            return out;
        }
        case OpKind::DeepWildcard: {
            if (ai >= siblings.size()) return out;
            std::vector<MatchState> landings;
            deepLandings(p.children.front(), siblings[ai], state, true, landings);
            for (MatchState& s : landings) out.emplace_back(std::move(s), 1);
            return out;
        }
        case OpKind::WideWildcard:
            return out; // handled by matchSequence
        default: {
            if (ai >= siblings.size()) return out;
            for (MatchState& s : matchNode(p, siblings[ai], state)) {
                out.emplace_back(std::move(s), 1);
            }
            return out;
        }
        }
    }

    // Anchored sequence matching: the pattern children must account for all
    // AST children; wide wildcards absorb zero-to-many siblings. Non-greedy
    // wildcards stop at the shortest consumption that completes; greedy ones
    // enumerate every completion.
    std::vector<MatchState> matchSequence(const std::vector<PatternNode>& pat,
                                          std::size_t pi,
                                          const std::vector<AstNode>& siblings,
                                          std::size_t ai, const MatchState& state) {
        if (pi == pat.size()) {
            if (ai == siblings.size()) return {derive(state)};
            return {};
        }
        const PatternNode& p = pat[pi];
        if (p.op == OpKind::WideWildcard) {
            std::vector<MatchState> out;
            for (std::size_t k = 0; ai + k <= siblings.size(); ++k) {
                std::vector<MatchState> rest =
                    matchSequence(pat, pi + 1, siblings, ai + k, state);
                append(out, std::move(rest));
                if (!out.empty() && !p.greedy) break; // first success wins
            }
            return out;
        }
        std::vector<MatchState> out;
        for (auto& [s, consumed] : matchItem(p, siblings, ai, state)) {
            append(out, matchSequence(pat, pi + 1, siblings, ai + consumed, s));
        }
        return out;
    }

    // --- unordered sibling matching -------------------------------------------------

    // Injective assignment of pattern children to distinct AST children;
    // unmatched AST children are permitted. Kind mismatches prune branches
    // immediately via matchNode.
    std::vector<MatchState> matchUnordered(const std::vector<PatternNode>& pat,
                                           const std::vector<AstNode>& siblings,
                                           const MatchState& state) {
        std::vector<bool> used(siblings.size(), false);
        std::vector<MatchState> out;
        unorderedStep(pat, 0, siblings, used, state, out);
        return out;
    }

    void unorderedStep(const std::vector<PatternNode>& pat, std::size_t pi,
                       const std::vector<AstNode>& siblings, std::vector<bool>& used,
                       const MatchState& state, std::vector<MatchState>& out) {
        if (pi == pat.size()) {
            out.push_back(derive(state));
            return;
        }
        unorderedItem(pat[pi], siblings, used, state,
                      [&](const MatchState& s) {
                          unorderedStep(pat, pi + 1, siblings, used, s, out);
                      });
    }

    template <typename Continue>
    void unorderedItem(const PatternNode& p, const std::vector<AstNode>& siblings,
                       std::vector<bool>& used, const MatchState& state,
                       Continue&& next) {
        switch (p.op) {
        case OpKind::Optional: {
            unorderedItem(p.children.front(), siblings, used, state, next);
            next(derive(state)); // skip branch
            return;
        }
        case OpKind::OneOf: {
            for (const PatternNode& alt : p.children) {
                unorderedItem(alt, siblings, used, state, next);
            }
            return;
        }
        case OpKind::DeepWildcard: {
            for (std::size_t j = 0; j < siblings.size(); ++j) {
                if (used[j]) continue;
                std::vector<MatchState> landings;
                deepLandings(p.children.front(), siblings[j], state, true, landings);
                used[j] = true;
                for (const MatchState& s : landings) next(s);
                used[j] = false;
            }
            return;
        }
        case OpKind::WideWildcard:
            return; // rejected at compile time
        default: {
            for (std::size_t j = 0; j < siblings.size(); ++j) {
                if (used[j]) continue;
                std::vector<MatchState> states = matchNode(p, siblings[j], state);
                if (states.empty()) continue;
                used[j] = true;
                for (const MatchState& s : states) next(s);
                used[j] = false;
            }
            return;
        }
        }
    }

    static void append(std::vector<MatchState>& dst, std::vector<MatchState>&& src) {
        for (MatchState& s : src) dst.push_back(std::move(s));
    }
    static void append(std::vector<MatchState>& dst,
                       const std::vector<MatchState>& src) {
        dst.insert(dst.end(), src.begin(), src.end());
    }
};

bool rootCouldMatchAt(const PatternNode& root, const AstNode& node) {
    switch (root.op) {
    case OpKind::Kind: return root.matchesKind(node);
    case OpKind::Any: return true;
    case OpKind::AnyType: return node.kind == NodeKind::TypeRef;
    case OpKind::OneOf:
        for (const PatternNode& alt : root.children) {
            if (rootCouldMatchAt(alt, node)) return true;
        }
        return false;
    case OpKind::Optional:
        return rootCouldMatchAt(root.children.front(), node);
    case OpKind::DeepWildcard:
    case OpKind::WideWildcard:
        return false; // wildcards are not sensible pattern roots
    }
    return false;
}

BindingSet canonicalBindings(const MatchState& state) {
    BindingSet set = state.bindings;
    std::sort(set.begin(), set.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return set;
}

} // namespace

BoundValue bindValueOf(const AstNode& node) {
    BoundValue value;
    switch (node.kind) {
    case NodeKind::VarRead:
    case NodeKind::VarWrite:
        value.tag = BoundValue::Tag::Decl;
        value.key = node.attrOr("decl_id");
        value.display = node.attrOr("name");
        break;
    case NodeKind::VarDef:
    case NodeKind::Parameter:
        value.tag = BoundValue::Tag::Decl;
        value.key = std::to_string(node.id);
        value.display = node.attrOr("name");
        break;
    case NodeKind::Method:
    case NodeKind::Constructor:
    case NodeKind::MethodCall:
        value.tag = BoundValue::Tag::Sig;
        value.key = node.attrOr("sig");
        value.display = node.attrOr("name");
        break;
    default:
        value.tag = BoundValue::Tag::Node;
        value.key = std::to_string(node.id);
        value.display = kindName(node.kind);
        break;
    }
    return value;
}

std::vector<MatchState> stepNode(const CompiledPattern& pattern,
                                 const PatternNode& node, const AstNode& target,
                                 const MatchState& state) {
    Engine engine(pattern, static_cast<std::size_t>(-1));
    return engine.matchNode(node, target, state);
}

EntryOutcome matchEntry(const CompiledPattern& pattern,
                        const java::CompilationUnit& unit, const AstNode& entry,
                        std::size_t budget) {
    EntryOutcome outcome;
    Engine engine(pattern, budget);
    std::vector<MatchState> finals;
    try {
        finals = engine.matchNode(pattern.root, entry, MatchState{});
    } catch (const BudgetExceeded& e) {
        MatchDiagnostic diag;
        diag.file = unit.path;
        diag.entrySig = entry.attrOr("sig");
        diag.span = entry.span;
        diag.budget = budget;
        diag.statesCreated = e.statesCreated;
        outcome.diagnostic = std::move(diag);
        outcome.statesCreated = engine.statesCreated;
        return outcome;
    }
    outcome.statesCreated = engine.statesCreated;

    // A state is valid only when every unconditionally required binding is
    // bound; alternatives inside oneOf/optional may leave theirs unbound.
    std::vector<MatchState> valid;
    for (MatchState& state : finals) {
        bool ok = true;
        for (const std::string& id : pattern.bindings.required) {
            if (!state.binding(id)) {
                ok = false;
                break;
            }
        }
        if (ok) valid.push_back(std::move(state));
    }
    if (valid.empty()) return outcome;

    MatchResult result;
    result.patternName = pattern.name;
    result.file = unit.path;
    result.entryId = entry.id;
    result.entryName = entry.attrOr("name");
    result.entrySig = entry.attrOr("sig");
    result.span = entry.span;
    result.unifiedStateCount = valid.size();
    for (const MatchState& state : valid) {
        result.bindingAlternatives.push_back(canonicalBindings(state));
    }
    std::sort(result.bindingAlternatives.begin(), result.bindingAlternatives.end(),
              [](const BindingSet& a, const BindingSet& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  for (std::size_t i = 0; i < a.size(); ++i) {
                      if (a[i].first != b[i].first) return a[i].first < b[i].first;
                      if (!(a[i].second == b[i].second)) return a[i].second < b[i].second;
                  }
                  return false;
              });
    result.bindingAlternatives.erase(
        std::unique(result.bindingAlternatives.begin(),
                    result.bindingAlternatives.end(),
                    [](const BindingSet& a, const BindingSet& b) {
                        if (a.size() != b.size()) return false;
                        for (std::size_t i = 0; i < a.size(); ++i) {
                            if (a[i].first != b[i].first ||
                                !(a[i].second == b[i].second)) {
                                return false;
                            }
                        }
                        return true;
                    }),
        result.bindingAlternatives.end());
    result.rawStates = std::move(valid);
    outcome.result = std::move(result);
    return outcome;
}

UnitMatches matchUnit(const CompiledPattern& pattern,
                      const java::CompilationUnit& unit, std::size_t budget) {
    UnitMatches matches;
    std::vector<const AstNode*> candidates;
    forEachNode(unit.root, [&](const AstNode& node) {
        if (rootCouldMatchAt(pattern.root, node)) candidates.push_back(&node);
    });
    for (const AstNode* entry : candidates) {
        EntryOutcome outcome = matchEntry(pattern, unit, *entry, budget);
        matches.statesCreated += outcome.statesCreated;
        if (outcome.diagnostic) {
            matches.diagnostics.push_back(std::move(*outcome.diagnostic));
        }
        if (outcome.result) matches.results.push_back(std::move(*outcome.result));
    }
    return matches;
}

CorpusMatches matchCorpus(const CompiledPattern& pattern,
                          const std::vector<java::CompilationUnit>& units,
                          std::size_t budget, unsigned jobs) {
    auto start = std::chrono::steady_clock::now();
    CorpusMatches corpus;
    std::vector<UnitMatches> perUnit(units.size());

    auto worker = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < units.size(); i += stride) {
            perUnit[i] = matchUnit(pattern, units[i], budget);
        }
    };
    unsigned n = std::max(1u, jobs);
    if (n == 1 || units.size() < 2) {
        worker(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker, t, n);
        for (auto& th : threads) th.join();
    }

    for (UnitMatches& unit : perUnit) {
        corpus.statesCreated += unit.statesCreated;
        for (MatchResult& r : unit.results) corpus.results.push_back(std::move(r));
        for (MatchDiagnostic& d : unit.diagnostics) {
            corpus.diagnostics.push_back(std::move(d));
        }
    }
    std::sort(corpus.results.begin(), corpus.results.end(),
              [](const MatchResult& a, const MatchResult& b) {
                  if (a.file != b.file) return a.file < b.file;
                  return a.span < b.span;
              });
    std::sort(corpus.diagnostics.begin(), corpus.diagnostics.end(),
              [](const MatchDiagnostic& a, const MatchDiagnostic& b) {
                  if (a.file != b.file) return a.file < b.file;
                  return a.span < b.span;
              });
    corpus.wallSeconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return corpus;
}

} // namespace algorec
