#pragma once

#include <memory>
#include <string>

namespace algorec {

/// Half-open spans are error-prone when the target is editor navigation, so
/// lines and columns are 1-based and both endpoints are inclusive.
struct SourceSpan {
    std::shared_ptr<const std::string> file; // shared across all nodes of a unit
    int startLine = 0;
    int startCol = 0;
    int endLine = 0;
    int endCol = 0;

    const std::string& path() const {
        static const std::string empty;
        return file ? *file : empty;
    }

    bool valid() const {
        return startLine > 0 &&
               (startLine < endLine || (startLine == endLine && startCol <= endCol));
    }

    /// True if `inner` lies within this span (endpoints may coincide).
    bool encloses(const SourceSpan& inner) const {
        if (startLine > inner.startLine ||
            (startLine == inner.startLine && startCol > inner.startCol)) {
            return false;
        }
        if (endLine < inner.endLine ||
            (endLine == inner.endLine && endCol < inner.endCol)) {
            return false;
        }
        return true;
    }

    friend bool operator==(const SourceSpan& a, const SourceSpan& b) {
        return a.path() == b.path() && a.startLine == b.startLine &&
               a.startCol == b.startCol && a.endLine == b.endLine && a.endCol == b.endCol;
    }

    friend bool operator<(const SourceSpan& a, const SourceSpan& b) {
        if (a.path() != b.path()) return a.path() < b.path();
        if (a.startLine != b.startLine) return a.startLine < b.startLine;
        if (a.startCol != b.startCol) return a.startCol < b.startCol;
        if (a.endLine != b.endLine) return a.endLine < b.endLine;
        return a.endCol < b.endCol;
    }
};

std::string to_string(const SourceSpan& span);

} // namespace algorec
