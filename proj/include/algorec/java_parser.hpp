#pragma once

#include "algorec/ast.hpp"
#include "algorec/java_lexer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace algorec::java {

/// One parsed source file. The tree is fully normalized: references are
/// resolved and compound assignments are expanded. `entryPoints` lists every
/// executable (methods, constructors and initializer blocks, the latter
/// wrapped as synthetic zero-parameter methods).
struct CompilationUnit {
    std::string path;
    AstNode root;
    std::vector<const AstNode*> entryPoints; // pointers into root

    /// Re-derives entryPoints; required after the root has been moved.
    void refreshEntryPoints();
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses one `.java` file. Throws ParseError when the file cannot be
/// tokenized or its top-level structure cannot be recovered, IoError when it
/// cannot be read.
CompilationUnit parseFile(const std::string& path);

/// Parses Java source given as a string (used by tests and synthetic input).
CompilationUnit parseSource(const std::string& source, const std::string& path);

struct ScanResult {
    std::vector<CompilationUnit> units; // lexicographic by path
    std::vector<ParseError> errors;
};

/// Recursively parses every `.java` file under `dir` in deterministic
/// (lexicographic) order. Parse failures are recorded, not fatal. `jobs`
/// selects the number of parser threads. Throws IoError when `dir` does not
/// exist.
ScanResult scanTree(const std::string& dir, unsigned jobs = 1);

} // namespace algorec::java
