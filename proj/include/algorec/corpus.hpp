#pragma once

#include "algorec/matcher.hpp"
#include "algorec/metrics.hpp"

#include <string>
#include <vector>

namespace algorec {

/// Path of `file` relative to `root` when it lies underneath, else `file`
/// unchanged. Label and pair files reference corpus files this way.
std::string relativeToRoot(const std::string& root, const std::string& file);

/// Flattens all executables of the scanned units into bench entries, with
/// paths relative to the corpus root.
std::vector<bench::EntryRef> corpusEntries(
    const std::vector<java::CompilationUnit>& units, const std::string& root);

/// Marks the entries detected by a corpus run: an entry is detected when a
/// result covers exactly its file and line span.
std::vector<bool> detectedEntries(const std::vector<bench::EntryRef>& entries,
                                  const CorpusMatches& matches,
                                  const std::string& root);

} // namespace algorec
