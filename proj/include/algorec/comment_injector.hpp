#pragma once

#include <string>
#include <vector>

namespace algorec {

/// A marker comment to place on its own line directly above `line` (1-based)
/// of `file`. `text` is the comment without indentation; the injector copies
/// the indentation of the target line.
struct Marker {
    std::string file;
    int line = 0;
    std::string text;
};

struct InjectOutcome {
    int filesChanged = 0;
    int markersInserted = 0;
};

/// Default marker line for a detection.
std::string formatMarker(const std::string& algorithm, const std::string& pattern,
                         int version, const std::string& commentTemplate = {});

/// Inserts the markers, bottom-up per file so line numbers stay valid.
/// Idempotent: a marker whose text already sits directly above the target
/// line is skipped. Never alters any existing line; only whole marker lines
/// are inserted. Throws std::runtime_error on I/O failure.
InjectOutcome injectMarkers(std::vector<Marker> markers);

} // namespace algorec
