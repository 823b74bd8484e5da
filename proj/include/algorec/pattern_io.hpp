#pragma once

#include "algorec/pattern_tree.hpp"

#include <stdexcept>
#include <string>

namespace algorec {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pattern file format: a versioned JSON document.
///
///   {
///     "format": "algorec-pattern",
///     "version": 1,
///     "name": "prime-factors",
///     "options": { "deep_into_nested_executables": false },
///     "root": {
///       "match": "kind" | "any" | "any_type" | "wide" | "deep"
///               | "one_of" | "optional",
///       "kinds": ["Method", ...],          // kind only
///       "label": "params",                 // kind with Other
///       "preds": [ {"attr": "op", "in": ["%", "/"]}
///                | {"attr": "text", "eq": "0"} ],
///       "order": "unordered",              // default ordered
///       "bind": "num",
///       "greedy": true,                    // default false
///       "children": [ ... ]
///     }
///   }
///
/// Defaults are omitted on write. deserializePattern validates the version,
/// the node arities (oneOf >= 1 child, optional/deep exactly 1, wide none)
/// and all enumerations, throwing FormatError on violations.
std::string serializePattern(const CompiledPattern& pattern);
CompiledPattern deserializePattern(const std::string& text);

CompiledPattern loadPatternFile(const std::string& path); // FormatError/IoError
void writePatternFile(const CompiledPattern& pattern, const std::string& path);

} // namespace algorec
