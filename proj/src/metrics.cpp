#include "algorec/metrics.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace algorec::bench {

Metrics computeMetrics(const ConfusionCounts& c) {
    Metrics m;
    double tp = static_cast<double>(c.tp);
    double fp = static_cast<double>(c.fp);
    double fn = static_cast<double>(c.fn);
    double tn = static_cast<double>(c.tn);
    if (c.tp + c.fn > 0) m.tpr = tp / (tp + fn);
    if (c.tp + c.fp > 0) m.ppv = tp / (tp + fp);
    if (m.tpr && m.ppv) {
        double sum = *m.ppv + *m.tpr;
        m.f1 = sum > 0 ? 2.0 * *m.ppv * *m.tpr / sum : 0.0;
    }
    double denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
    if (denom > 0) m.mcc = (tp * tn - fp * fn) / std::sqrt(denom);
    long total = c.total();
    m.accuracy = total > 0 ? (tp + tn) / static_cast<double>(total) : 0.0;
    return m;
}

ConfusionCounts countsFromTotals(long tp, long fp, long fn, long methodsTotal) {
    ConfusionCounts c;
    c.tp = tp;
    c.fp = fp;
    c.fn = fn;
    c.tn = methodsTotal - tp - fp - fn;
    return c;
}

// --- CSV parsing -------------------------------------------------------------

namespace {

std::vector<std::string> splitCsvLine(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

int parseInt(const std::string& text, const char* what, std::size_t lineNo) {
    try {
        return std::stoi(text);
    } catch (const std::exception&) {
        throw CsvError("line " + std::to_string(lineNo) + ": bad " + what + ": '" +
                       text + "'");
    }
}

long parseLong(const std::string& text, const char* what, std::size_t lineNo) {
    try {
        return std::stol(text);
    } catch (const std::exception&) {
        throw CsvError("line " + std::to_string(lineNo) + ": bad " + what + ": '" +
                       text + "'");
    }
}

std::vector<std::string> csvLines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::string readAll(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CsvError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

std::vector<LabelRow> parseLabelsCsv(const std::string& text) {
    std::vector<std::string> lines = csvLines(text);
    if (lines.empty() || splitCsvLine(lines[0]) !=
                             std::vector<std::string>{"file", "start_line",
                                                      "end_line", "label"}) {
        throw CsvError("labels file must start with header "
                       "'file,start_line,end_line,label'");
    }
    std::vector<LabelRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::vector<std::string> fields = splitCsvLine(lines[i]);
        if (fields.size() != 4) {
            throw CsvError("line " + std::to_string(i + 1) + ": expected 4 fields");
        }
        LabelRow row;
        row.file = fields[0];
        row.startLine = parseInt(fields[1], "start_line", i + 1);
        row.endLine = parseInt(fields[2], "end_line", i + 1);
        if (fields[3] == "TRUE_POSITIVE") {
            row.truePositive = true;
        } else if (fields[3] == "FALSE_POSITIVE") {
            row.truePositive = false;
        } else {
            throw CsvError("line " + std::to_string(i + 1) + ": bad label '" +
                           fields[3] + "'");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<LabelRow> loadLabelsFile(const std::string& path) {
    return parseLabelsCsv(readAll(path));
}

const char* cloneTypeName(CloneType type) {
    switch (type) {
    case CloneType::T1: return "T1";
    case CloneType::T2: return "T2";
    case CloneType::VST3: return "VST3";
    case CloneType::ST3: return "ST3";
    case CloneType::MT3: return "MT3";
    case CloneType::WT3T4: return "WT3/T4";
    }
    return "?";
}

CloneType cloneTypeFromName(const std::string& name) {
    if (name == "T1") return CloneType::T1;
    if (name == "T2") return CloneType::T2;
    if (name == "VST3") return CloneType::VST3;
    if (name == "ST3") return CloneType::ST3;
    if (name == "MT3") return CloneType::MT3;
    if (name == "WT3/T4" || name == "WT3" || name == "T4") return CloneType::WT3T4;
    throw CsvError("unknown clone type: " + name);
}

std::vector<ClonePairRow> parsePairsCsv(const std::string& text) {
    std::vector<std::string> lines = csvLines(text);
    const std::vector<std::string> header = {"file_a", "start_a", "end_a",
                                             "file_b", "start_b", "end_b",
                                             "type",   "tokens_a", "tokens_b"};
    if (lines.empty() || splitCsvLine(lines[0]) != header) {
        throw CsvError("pairs file must start with header "
                       "'file_a,start_a,end_a,file_b,start_b,end_b,type,"
                       "tokens_a,tokens_b'");
    }
    std::vector<ClonePairRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::vector<std::string> fields = splitCsvLine(lines[i]);
        if (fields.size() != 9) {
            throw CsvError("line " + std::to_string(i + 1) + ": expected 9 fields");
        }
        ClonePairRow row;
        row.fileA = fields[0];
        row.startA = parseInt(fields[1], "start_a", i + 1);
        row.endA = parseInt(fields[2], "end_a", i + 1);
        row.fileB = fields[3];
        row.startB = parseInt(fields[4], "start_b", i + 1);
        row.endB = parseInt(fields[5], "end_b", i + 1);
        row.type = cloneTypeFromName(fields[6]);
        row.tokensA = parseLong(fields[7], "tokens_a", i + 1);
        row.tokensB = parseLong(fields[8], "tokens_b", i + 1);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ClonePairRow> loadPairsFile(const std::string& path) {
    return parsePairsCsv(readAll(path));
}

// --- evaluation ---------------------------------------------------------------

namespace {

// Resolves a (file, start, end) location to an entry index: exact line span
// first, then a unique entry sharing the start line (end-line conventions
// vary between corpora). Returns -1 when unresolved or ambiguous.
long resolveLocation(const std::vector<EntryRef>& entries, const std::string& file,
                     int startLine, int endLine) {
    long fallback = -1;
    int fallbackCount = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const EntryRef& e = entries[i];
        if (e.file != file) continue;
        if (e.startLine == startLine && e.endLine == endLine) {
            return static_cast<long>(i);
        }
        if (e.startLine == startLine) {
            fallback = static_cast<long>(i);
            ++fallbackCount;
        }
    }
    return fallbackCount == 1 ? fallback : -1;
}

} // namespace

Evaluation evaluate(const std::vector<EntryRef>& entries,
                    const std::vector<bool>& detected,
                    const std::vector<LabelRow>& labels) {
    Evaluation eval;
    std::vector<int> labelOf(entries.size(), 0); // 0 unlabeled, 1 TP, -1 FP
    for (const LabelRow& row : labels) {
        long idx = resolveLocation(entries, row.file, row.startLine, row.endLine);
        if (idx < 0) {
            eval.unresolvedLabels.push_back(row.file + ":" +
                                            std::to_string(row.startLine) + "-" +
                                            std::to_string(row.endLine));
            continue;
        }
        labelOf[static_cast<std::size_t>(idx)] = row.truePositive ? 1 : -1;
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        bool hit = i < detected.size() && detected[i];
        if (hit) {
            if (labelOf[i] == 1) {
                ++eval.counts.tp;
            } else {
                ++eval.counts.fp; // labeled FALSE_POSITIVE or unknown to labels
            }
        } else {
            if (labelOf[i] == 1) {
                ++eval.counts.fn;
            } else {
                ++eval.counts.tn;
            }
        }
    }
    eval.metrics = computeMetrics(eval.counts);
    return eval;
}

std::map<CloneType, CloneTypeRecall> clonePairRecall(
    const std::vector<EntryRef>& entries, const std::vector<bool>& detected,
    const std::vector<ClonePairRow>& pairs, long minTokens) {
    std::map<CloneType, CloneTypeRecall> table;
    auto found = [&](const std::string& file, int start, int end) {
        long idx = resolveLocation(entries, file, start, end);
        return idx >= 0 && static_cast<std::size_t>(idx) < detected.size() &&
               detected[static_cast<std::size_t>(idx)];
    };
    for (const ClonePairRow& pair : pairs) {
        if (pair.tokensA < minTokens || pair.tokensB < minTokens) continue;
        CloneTypeRecall& row = table[pair.type];
        ++row.total;
        if (found(pair.fileA, pair.startA, pair.endA) &&
            found(pair.fileB, pair.startB, pair.endB)) {
            ++row.detectedPairs;
        }
    }
    for (auto& [type, row] : table) {
        if (row.total > 0) {
            row.recall = static_cast<double>(row.detectedPairs) /
                         static_cast<double>(row.total);
        }
    }
    return table;
}

// --- reporting --------------------------------------------------------------------

std::string formatDuration(double seconds) {
    long total = static_cast<long>(seconds + 0.5);
    long h = total / 3600;
    long m = (total % 3600) / 60;
    long s = total % 60;
    std::ostringstream out;
    out << h << ":" << (m < 10 ? "0" : "") << m << ":" << (s < 10 ? "0" : "") << s;
    return out.str();
}

namespace {

std::string fmt(const std::optional<double>& value) {
    if (!value) return "N/A";
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(4);
    out << *value;
    return out.str();
}

} // namespace

std::string renderReportText(const BenchReport& report) {
    std::ostringstream out;
    out << report.pattern << " (" << report.methodsTotal << " methods total)\n";
    out << "  TP=" << report.counts.tp << " FP=" << report.counts.fp
        << " FN=" << report.counts.fn << " MCC=" << fmt(report.metrics.mcc)
        << " F1=" << fmt(report.metrics.f1) << " TPR=" << fmt(report.metrics.tpr)
        << " PPV=" << fmt(report.metrics.ppv) << " "
        << formatDuration(report.wallSeconds) << " #MS=" << report.matchingStates
        << "\n";
    if (!report.unresolvedLabels.empty()) {
        out << "  unresolved labels (" << report.unresolvedLabels.size() << "):\n";
        for (const std::string& label : report.unresolvedLabels) {
            out << "    " << label << "\n";
        }
    }
    if (report.cloneRecall) {
        out << "  clone-pair recall (min tokens " << report.minTokens << "):\n";
        for (const auto& [type, row] : *report.cloneRecall) {
            out << "    " << cloneTypeName(type) << ": total=" << row.total
                << " detected=" << row.detectedPairs << " recall=" << fmt(row.recall)
                << "\n";
        }
    }
    return out.str();
}

namespace {

using json = nlohmann::ordered_json;

json optToJson(const std::optional<double>& value) {
    if (!value) return nullptr;
    return *value;
}

std::optional<double> optFromJson(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

} // namespace

std::string renderReportJson(const BenchReport& report) {
    json out;
    out["format"] = "algorec-report";
    out["version"] = 1;
    out["pattern"] = report.pattern;
    out["methods_total"] = report.methodsTotal;
    out["counts"] = {{"tp", report.counts.tp},
                     {"fp", report.counts.fp},
                     {"fn", report.counts.fn},
                     {"tn", report.counts.tn}};
    out["metrics"] = {{"tpr", optToJson(report.metrics.tpr)},
                      {"ppv", optToJson(report.metrics.ppv)},
                      {"f1", optToJson(report.metrics.f1)},
                      {"mcc", optToJson(report.metrics.mcc)},
                      {"accuracy", report.metrics.accuracy}};
    out["wall_seconds"] = report.wallSeconds;
    out["matching_states"] = report.matchingStates;
    out["unresolved_labels"] = report.unresolvedLabels;
    if (report.cloneRecall) {
        json recall = json::array();
        for (const auto& [type, row] : *report.cloneRecall) {
            recall.push_back({{"type", cloneTypeName(type)},
                              {"total", row.total},
                              {"detected", row.detectedPairs},
                              {"recall", optToJson(row.recall)}});
        }
        out["clone_recall"] = std::move(recall);
        out["min_tokens"] = report.minTokens;
    }
    return out.dump(2) + "\n";
}

BenchReport parseReportJson(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CsvError(std::string("invalid report document: ") + e.what());
    }
    if (in.value("format", "") != "algorec-report" || in.value("version", 0) != 1) {
        throw CsvError("not a version-1 algorec-report document");
    }
    BenchReport report;
    report.pattern = in.value("pattern", "");
    report.methodsTotal = in.value("methods_total", 0L);
    report.counts.tp = in.at("counts").value("tp", 0L);
    report.counts.fp = in.at("counts").value("fp", 0L);
    report.counts.fn = in.at("counts").value("fn", 0L);
    report.counts.tn = in.at("counts").value("tn", 0L);
    const json& metrics = in.at("metrics");
    report.metrics.tpr = optFromJson(metrics.at("tpr"));
    report.metrics.ppv = optFromJson(metrics.at("ppv"));
    report.metrics.f1 = optFromJson(metrics.at("f1"));
    report.metrics.mcc = optFromJson(metrics.at("mcc"));
    report.metrics.accuracy = metrics.value("accuracy", 0.0);
    report.wallSeconds = in.value("wall_seconds", 0.0);
    report.matchingStates = in.value("matching_states", std::size_t{0});
    report.unresolvedLabels =
        in.value("unresolved_labels", std::vector<std::string>{});
    if (in.contains("clone_recall")) {
        std::map<CloneType, CloneTypeRecall> table;
        for (const json& row : in.at("clone_recall")) {
            CloneTypeRecall r;
            r.total = row.value("total", 0L);
            r.detectedPairs = row.value("detected", 0L);
            r.recall = optFromJson(row.at("recall"));
            table[cloneTypeFromName(row.at("type").get<std::string>())] = r;
        }
        report.cloneRecall = std::move(table);
        report.minTokens = in.value("min_tokens", 0L);
    }
    return report;
}

} // namespace algorec::bench
