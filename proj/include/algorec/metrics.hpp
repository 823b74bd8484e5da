#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace algorec::bench {

struct ConfusionCounts {
    long tp = 0;
    long fp = 0;
    long fn = 0;
    long tn = 0;

    long total() const { return tp + fp + fn + tn; }
    friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

/// Ratio metrics; a metric is absent ("N/A") when its denominator is zero.
/// Precision and F1 are lower bounds under the evaluation convention that
/// every detection unknown to the label set counts as a false positive.
struct Metrics {
    std::optional<double> tpr;  // recall
    std::optional<double> ppv;  // precision (lower bound)
    std::optional<double> f1;   // lower bound
    std::optional<double> mcc;
    double accuracy = 0.0;
};

Metrics computeMetrics(const ConfusionCounts& counts);

/// Builds counts from (tp, fp, fn, methods total), deriving tn. Used to
/// reproduce published benchmark rows.
ConfusionCounts countsFromTotals(long tp, long fp, long fn, long methodsTotal);

// --- labeled corpora ------------------------------------------------------------

/// One executable of the corpus, identified by file and 1-based line span.
struct EntryRef {
    std::string file;
    int startLine = 0;
    int endLine = 0;
    std::string sig;
};

struct LabelRow {
    std::string file;
    int startLine = 0;
    int endLine = 0;
    bool truePositive = false; // TRUE_POSITIVE vs FALSE_POSITIVE
};

struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// labels.csv: header `file,start_line,end_line,label`, comma-delimited,
/// UTF-8, paths relative to the corpus root, label TRUE_POSITIVE or
/// FALSE_POSITIVE.
std::vector<LabelRow> parseLabelsCsv(const std::string& text);
std::vector<LabelRow> loadLabelsFile(const std::string& path);

enum class CloneType { T1, T2, VST3, ST3, MT3, WT3T4 };
const char* cloneTypeName(CloneType type);
CloneType cloneTypeFromName(const std::string& name);

struct ClonePairRow {
    std::string fileA;
    int startA = 0, endA = 0;
    std::string fileB;
    int startB = 0, endB = 0;
    CloneType type = CloneType::T1;
    long tokensA = 0;
    long tokensB = 0;
};

/// pairs.csv: header
/// `file_a,start_a,end_a,file_b,start_b,end_b,type,tokens_a,tokens_b`.
std::vector<ClonePairRow> parsePairsCsv(const std::string& text);
std::vector<ClonePairRow> loadPairsFile(const std::string& path);

// --- evaluation protocol ----------------------------------------------------------

struct Evaluation {
    ConfusionCounts counts;
    Metrics metrics;
    std::vector<std::string> unresolvedLabels; // label rows matching no entry
};

/// Table-1 protocol. `detected[i]` says whether entries[i] was detected.
/// A detected entry labeled TRUE_POSITIVE counts tp; detected but labeled
/// FALSE_POSITIVE or unlabeled counts fp (lower-bound convention);
/// undetected TRUE_POSITIVE counts fn; everything else tn.
Evaluation evaluate(const std::vector<EntryRef>& entries,
                    const std::vector<bool>& detected,
                    const std::vector<LabelRow>& labels);

struct CloneTypeRecall {
    long total = 0;
    long detectedPairs = 0;
    std::optional<double> recall; // absent when total == 0
};

/// Table-2 protocol: a pair counts as detected only when both locations were
/// found; pairs where either side's token length is below `minTokens` leave
/// the denominator entirely.
std::map<CloneType, CloneTypeRecall> clonePairRecall(
    const std::vector<EntryRef>& entries, const std::vector<bool>& detected,
    const std::vector<ClonePairRow>& pairs, long minTokens);

// --- reporting --------------------------------------------------------------------

struct BenchReport {
    std::string pattern;
    long methodsTotal = 0;
    ConfusionCounts counts;
    Metrics metrics;
    double wallSeconds = 0.0;
    std::size_t matchingStates = 0;
    std::vector<std::string> unresolvedLabels;
    std::optional<std::map<CloneType, CloneTypeRecall>> cloneRecall;
    long minTokens = 0;
};

/// Renders the TP/FP/FN/MCC/F1/TPR/PPV row (plus the per-type recall table
/// when clone pairs were evaluated).
std::string renderReportText(const BenchReport& report);

/// Versioned machine-readable form; parseReportJson(renderReportJson(r))
/// round-trips all metric fields.
std::string renderReportJson(const BenchReport& report);
BenchReport parseReportJson(const std::string& text);

std::string formatDuration(double seconds); // h:mm:ss

} // namespace algorec::bench
