#include "algorec/pattern_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace algorec {

namespace {

using json = nlohmann::ordered_json;
using OpKind = PatternNode::OpKind;

const char* opToken(OpKind op) {
    switch (op) {
    case OpKind::Kind: return "kind";
    case OpKind::Any: return "any";
    case OpKind::AnyType: return "any_type";
    case OpKind::WideWildcard: return "wide";
    case OpKind::DeepWildcard: return "deep";
    case OpKind::OneOf: return "one_of";
    case OpKind::Optional: return "optional";
    }
    return "?";
}

OpKind opFromToken(const std::string& token) {
    if (token == "kind") return OpKind::Kind;
    if (token == "any") return OpKind::Any;
    if (token == "any_type") return OpKind::AnyType;
    if (token == "wide") return OpKind::WideWildcard;
    if (token == "deep") return OpKind::DeepWildcard;
    if (token == "one_of") return OpKind::OneOf;
    if (token == "optional") return OpKind::Optional;
    throw FormatError("unknown matcher token: " + token);
}

json nodeToJson(const PatternNode& node) {
    json out;
    out["match"] = opToken(node.op);
    if (node.op == OpKind::Kind) {
        json kinds = json::array();
        for (NodeKind kind : node.kinds) kinds.push_back(kindName(kind));
        out["kinds"] = std::move(kinds);
        if (!node.otherLabel.empty()) out["label"] = node.otherLabel;
    }
    if (!node.predicates.empty()) {
        json preds = json::array();
        for (const AttrPredicate& pred : node.predicates) {
            json p;
            p["attr"] = pred.attr;
            if (pred.mode == AttrPredicate::Mode::In) {
                p["in"] = pred.values;
            } else {
                p["eq"] = pred.values.empty() ? "" : pred.values.front();
            }
            preds.push_back(std::move(p));
        }
        out["preds"] = std::move(preds);
    }
    if (node.childOrder == ChildOrder::Unordered) out["order"] = "unordered";
    if (node.binding) out["bind"] = *node.binding;
    if (node.greedy) out["greedy"] = true;
    if (!node.children.empty()) {
        json children = json::array();
        for (const PatternNode& child : node.children) {
            children.push_back(nodeToJson(child));
        }
        out["children"] = std::move(children);
    }
    return out;
}

PatternNode nodeFromJson(const json& in) {
    if (!in.is_object() || !in.contains("match")) {
        throw FormatError("pattern node must be an object with a 'match' field");
    }
    PatternNode node;
    node.op = opFromToken(in.at("match").get<std::string>());
    if (node.op == OpKind::Kind) {
        if (!in.contains("kinds") || !in.at("kinds").is_array() ||
            in.at("kinds").empty()) {
            throw FormatError("kind node requires a nonempty 'kinds' array");
        }
        for (const json& k : in.at("kinds")) {
            try {
                node.kinds.push_back(kindFromName(k.get<std::string>()));
            } catch (const std::invalid_argument& e) {
                throw FormatError(e.what());
            }
        }
        if (in.contains("label")) node.otherLabel = in.at("label").get<std::string>();
    } else if (in.contains("kinds")) {
        throw FormatError("'kinds' is only valid on kind nodes");
    }
    if (in.contains("preds")) {
        for (const json& p : in.at("preds")) {
            AttrPredicate pred;
            pred.attr = p.at("attr").get<std::string>();
            if (p.contains("in")) {
                pred.mode = AttrPredicate::Mode::In;
                pred.values = p.at("in").get<std::vector<std::string>>();
                if (pred.values.empty()) {
                    throw FormatError("'in' predicate requires at least one value");
                }
            } else if (p.contains("eq")) {
                pred.mode = AttrPredicate::Mode::Equals;
                pred.values = {p.at("eq").get<std::string>()};
            } else {
                throw FormatError("predicate requires 'in' or 'eq'");
            }
            node.predicates.push_back(std::move(pred));
        }
    }
    if (in.contains("order")) {
        std::string order = in.at("order").get<std::string>();
        if (order == "unordered") {
            node.childOrder = ChildOrder::Unordered;
        } else if (order == "ordered") {
            node.childOrder = ChildOrder::Ordered;
        } else {
            throw FormatError("unknown order: " + order);
        }
    }
    if (in.contains("bind")) node.binding = in.at("bind").get<std::string>();
    if (in.contains("greedy")) node.greedy = in.at("greedy").get<bool>();
    if (in.contains("children")) {
        for (const json& c : in.at("children")) {
            node.children.push_back(nodeFromJson(c));
        }
    }
    // arity invariants
    switch (node.op) {
    case OpKind::OneOf:
        if (node.children.empty()) throw FormatError("one_of requires children");
        break;
    case OpKind::Optional:
    case OpKind::DeepWildcard:
        if (node.children.size() != 1) {
            throw FormatError(std::string(opToken(node.op)) +
                              " requires exactly one child");
        }
        break;
    case OpKind::WideWildcard:
        if (!node.children.empty()) {
            throw FormatError("wide wildcard cannot have children");
        }
        break;
    default:
        break;
    }
    return node;
}

} // namespace

std::string serializePattern(const CompiledPattern& pattern) {
    json out;
    out["format"] = "algorec-pattern";
    out["version"] = pattern.version;
    if (!pattern.name.empty()) out["name"] = pattern.name;
    if (pattern.options.deepIntoNestedExecutables) {
        out["options"] = {{"deep_into_nested_executables", true}};
    }
    out["root"] = nodeToJson(pattern.root);
    return out.dump(2) + "\n";
}

CompiledPattern deserializePattern(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid pattern document: ") + e.what());
    }
    if (!in.is_object() || in.value("format", "") != "algorec-pattern") {
        throw FormatError("not an algorec-pattern document");
    }
    if (!in.contains("version") || !in.at("version").is_number_integer()) {
        throw FormatError("missing version field");
    }
    int version = in.at("version").get<int>();
    if (version != 1) {
        throw FormatError("unsupported pattern version: " + std::to_string(version));
    }
    CompiledPattern pattern;
    pattern.version = version;
    pattern.name = in.value("name", "");
    if (in.contains("options")) {
        pattern.options.deepIntoNestedExecutables =
            in.at("options").value("deep_into_nested_executables", false);
    }
    if (!in.contains("root")) throw FormatError("missing root node");
    pattern.root = nodeFromJson(in.at("root"));
    indexPattern(pattern);
    return pattern;
}

CompiledPattern loadPatternFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read pattern file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CompiledPattern pattern = deserializePattern(buffer.str());
    if (pattern.name.empty()) {
        std::string stem = path;
        if (auto slash = stem.find_last_of("/\\"); slash != std::string::npos) {
            stem = stem.substr(slash + 1);
        }
        if (auto dot = stem.find('.'); dot != std::string::npos) stem = stem.substr(0, dot);
        pattern.name = stem;
    }
    return pattern;
}

void writePatternFile(const CompiledPattern& pattern, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write pattern file: " + path);
    out << serializePattern(pattern);
}

} // namespace algorec
