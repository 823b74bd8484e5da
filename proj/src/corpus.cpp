#include "algorec/corpus.hpp"

#include <map>

namespace algorec {

std::string relativeToRoot(const std::string& root, const std::string& file) {
    if (root.empty()) return file;
    std::string prefix = root;
    if (prefix.back() != '/') prefix += '/';
    if (file.rfind(prefix, 0) == 0) return file.substr(prefix.size());
    return file;
}

std::vector<bench::EntryRef> corpusEntries(
    const std::vector<java::CompilationUnit>& units, const std::string& root) {
    std::vector<bench::EntryRef> entries;
    for (const java::CompilationUnit& unit : units) {
        for (const AstNode* entry : unit.entryPoints) {
            bench::EntryRef ref;
            ref.file = relativeToRoot(root, unit.path);
            ref.startLine = entry->span.startLine;
            ref.endLine = entry->span.endLine;
            ref.sig = entry->attrOr("sig");
            entries.push_back(std::move(ref));
        }
    }
    return entries;
}

std::vector<bool> detectedEntries(const std::vector<bench::EntryRef>& entries,
                                  const CorpusMatches& matches,
                                  const std::string& root) {
    std::map<std::pair<std::string, std::pair<int, int>>, std::size_t> index;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        index[{entries[i].file, {entries[i].startLine, entries[i].endLine}}] = i;
    }
    std::vector<bool> detected(entries.size(), false);
    for (const MatchResult& result : matches.results) {
        auto it = index.find({relativeToRoot(root, result.file),
                              {result.span.startLine, result.span.endLine}});
        if (it != index.end()) detected[it->second] = true;
    }
    return detected;
}

} // namespace algorec
