#include "algorec/comment_injector.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace algorec {

namespace {

std::string replaceAll(std::string text, const std::string& key,
                       const std::string& value) {
    std::size_t pos = 0;
    while ((pos = text.find(key, pos)) != std::string::npos) {
        text.replace(pos, key.size(), value);
        pos += value.size();
    }
    return text;
}

std::string trimmed(const std::string& line) {
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) return {};
    std::size_t end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1);
}

} // namespace

std::string formatMarker(const std::string& algorithm, const std::string& pattern,
                         int version, const std::string& commentTemplate) {
    std::string tpl = commentTemplate.empty()
                          ? "// [algorec] {algorithm} — detected by pattern "
                            "{pattern} v{version}"
                          : commentTemplate;
    tpl = replaceAll(std::move(tpl), "{algorithm}", algorithm);
    tpl = replaceAll(std::move(tpl), "{pattern}", pattern);
    tpl = replaceAll(std::move(tpl), "{version}", std::to_string(version));
    return tpl;
}

InjectOutcome injectMarkers(std::vector<Marker> markers) {
    InjectOutcome outcome;
    std::map<std::string, std::vector<Marker>> byFile;
    for (Marker& marker : markers) {
        byFile[marker.file].push_back(std::move(marker));
    }
    for (auto& [file, fileMarkers] : byFile) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read " + file);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        in.close();

        // Bottom-up keeps earlier line numbers stable while inserting.
        std::sort(fileMarkers.begin(), fileMarkers.end(),
                  [](const Marker& a, const Marker& b) { return a.line > b.line; });
        bool changed = false;
        for (const Marker& marker : fileMarkers) {
            if (marker.line < 1 ||
                marker.line > static_cast<int>(lines.size())) {
                continue;
            }
            std::size_t idx = static_cast<std::size_t>(marker.line - 1);
            if (idx > 0 && trimmed(lines[idx - 1]) == trimmed(marker.text)) {
                continue; // already injected
            }
            const std::string& target = lines[idx];
            std::string indent =
                target.substr(0, target.find_first_not_of(" \t") == std::string::npos
                                     ? 0
                                     : target.find_first_not_of(" \t"));
            lines.insert(lines.begin() + static_cast<long>(idx),
                         indent + marker.text);
            changed = true;
            ++outcome.markersInserted;
        }
        if (changed) {
            std::ofstream out(file, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write " + file);
            for (const std::string& l : lines) out << l << "\n";
            ++outcome.filesChanged;
        }
    }
    return outcome;
}

} // namespace algorec
