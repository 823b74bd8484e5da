#include "algorec/catalog.hpp"
#include "algorec/comment_injector.hpp"
#include "algorec/corpus.hpp"
#include "algorec/matcher.hpp"
#include "algorec/metrics.hpp"
#include "algorec/pattern_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace algorec;

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 2; // --strict with parse errors or budget hits
constexpr int kExitUsage = 64;
constexpr int kExitLabels = 65;
constexpr int kExitIo = 74;

#ifndef ALGOREC_DEFAULT_CATALOG_DIR
#define ALGOREC_DEFAULT_CATALOG_DIR "catalog"
#endif

std::string defaultCatalogDir() {
    if (const char* env = std::getenv("ALGOREC_CATALOG_DIR")) return env;
    return ALGOREC_DEFAULT_CATALOG_DIR;
}

std::size_t defaultBudget() {
    if (const char* env = std::getenv("ALGOREC_BUDGET")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
    }
    return kDefaultStateBudget;
}

bool isCatalogName(const std::string& name) {
    for (const std::string& entry : catalog::catalogNames()) {
        if (entry == name) return true;
    }
    return false;
}

std::vector<CompiledPattern> resolvePatterns(const std::vector<std::string>& specs,
                                             const std::string& catalogDir) {
    std::vector<CompiledPattern> patterns;
    for (const std::string& spec : specs) {
        if (isCatalogName(spec)) {
            patterns.push_back(
                catalog::loadCatalogEntry(catalogDir, spec).pattern);
        } else {
            patterns.push_back(loadPatternFile(spec));
        }
    }
    return patterns;
}

std::string bindingsToText(const BindingSet& set) {
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += set[i].first + "=" + set[i].second.display;
    }
    return out;
}

nlohmann::ordered_json resultToJson(const MatchResult& result) {
    nlohmann::ordered_json bindings = nlohmann::ordered_json::array();
    for (const BindingSet& set : result.bindingAlternatives) {
        nlohmann::ordered_json alt;
        for (const auto& [id, value] : set) alt[id] = value.display;
        bindings.push_back(std::move(alt));
    }
    return {{"file", result.file},
            {"pattern", result.patternName},
            {"entry", result.entrySig},
            {"start_line", result.span.startLine},
            {"end_line", result.span.endLine},
            {"bindings", std::move(bindings)},
            {"unified_states", result.unifiedStateCount}};
}

int runScan(const std::string& corpusDir, const std::vector<std::string>& patternSpecs,
            const std::string& catalogDir, bool json, bool inject,
            const std::string& commentTemplate, std::size_t budget, unsigned jobs,
            bool strict) {
    java::ScanResult scan = java::scanTree(corpusDir, jobs);
    std::vector<CompiledPattern> patterns = resolvePatterns(patternSpecs, catalogDir);

    nlohmann::ordered_json jsonOut;
    jsonOut["format"] = "algorec-scan";
    jsonOut["version"] = 1;
    jsonOut["results"] = nlohmann::ordered_json::array();
    jsonOut["diagnostics"] = nlohmann::ordered_json::array();
    jsonOut["parse_errors"] = nlohmann::ordered_json::array();

    bool hadDiagnostics = !scan.errors.empty();
    for (const java::ParseError& error : scan.errors) {
        if (json) {
            jsonOut["parse_errors"].push_back(error.what());
        } else {
            std::cerr << "parse error: " << error.what() << "\n";
        }
    }

    std::vector<Marker> markers;
    std::size_t totalStates = 0;
    for (const CompiledPattern& pattern : patterns) {
        CorpusMatches matches = matchCorpus(pattern, scan.units, budget, jobs);
        totalStates += matches.statesCreated;
        for (const MatchResult& result : matches.results) {
            if (json) {
                jsonOut["results"].push_back(resultToJson(result));
            } else {
                std::cout << result.file << ":" << result.span.startLine << "-"
                          << result.span.endLine << "  " << result.patternName
                          << "  " << result.entrySig;
                if (!result.bindingAlternatives.empty()) {
                    std::cout << "  bindings: "
                              << bindingsToText(result.bindingAlternatives.front());
                    for (std::size_t i = 1; i < result.bindingAlternatives.size();
                         ++i) {
                        std::cout << " | "
                                  << bindingsToText(result.bindingAlternatives[i]);
                    }
                }
                std::cout << "\n";
            }
            if (inject) {
                Marker marker;
                marker.file = result.file;
                marker.line = result.span.startLine;
                marker.text = formatMarker(result.patternName, result.patternName,
                                           pattern.version, commentTemplate);
                markers.push_back(std::move(marker));
            }
        }
        for (const MatchDiagnostic& diag : matches.diagnostics) {
            hadDiagnostics = true;
            std::string text = diag.file + ":" +
                               std::to_string(diag.span.startLine) + " " +
                               diag.entrySig + ": state budget exceeded (" +
                               std::to_string(diag.statesCreated) + " > " +
                               std::to_string(diag.budget) + "), entry skipped";
            if (json) {
                jsonOut["diagnostics"].push_back(text);
            } else {
                std::cerr << "diagnostic: " << text << "\n";
            }
        }
    }
    if (inject) {
        InjectOutcome outcome = injectMarkers(std::move(markers));
        if (!json) {
            std::cout << "injected " << outcome.markersInserted << " marker(s) in "
                      << outcome.filesChanged << " file(s)\n";
        }
    }
    if (json) {
        jsonOut["matching_states"] = totalStates;
        std::cout << jsonOut.dump(2) << "\n";
    }
    return (strict && hadDiagnostics) ? kExitDiagnostics : kExitOk;
}

int runBench(const std::string& corpusDir, const std::string& patternSpec,
             const std::string& catalogDir, const std::string& labelsPath,
             const std::string& pairsPath, long minTokens,
             const std::string& outPath, std::size_t budget, unsigned jobs) {
    java::ScanResult scan = java::scanTree(corpusDir, jobs);
    for (const java::ParseError& error : scan.errors) {
        std::cerr << "parse error: " << error.what() << "\n";
    }
    CompiledPattern pattern =
        resolvePatterns({patternSpec}, catalogDir).front();

    CorpusMatches matches = matchCorpus(pattern, scan.units, budget, jobs);
    std::vector<bench::EntryRef> entries = corpusEntries(scan.units, corpusDir);
    std::vector<bool> detected = detectedEntries(entries, matches, corpusDir);

    std::vector<bench::LabelRow> labels = bench::loadLabelsFile(labelsPath);
    bench::Evaluation eval = bench::evaluate(entries, detected, labels);

    bench::BenchReport report;
    report.pattern = pattern.name;
    report.methodsTotal = static_cast<long>(entries.size());
    report.counts = eval.counts;
    report.metrics = eval.metrics;
    report.wallSeconds = matches.wallSeconds;
    report.matchingStates = matches.statesCreated;
    report.unresolvedLabels = eval.unresolvedLabels;
    if (!pairsPath.empty()) {
        std::vector<bench::ClonePairRow> pairs = bench::loadPairsFile(pairsPath);
        report.cloneRecall = bench::clonePairRecall(entries, detected, pairs, minTokens);
        report.minTokens = minTokens;
    }
    std::cout << bench::renderReportText(report);
    if (!outPath.empty()) {
        std::ofstream out(outPath, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << outPath << "\n";
            return kExitIo;
        }
        out << bench::renderReportJson(report);
    }
    return report.unresolvedLabels.empty() ? kExitOk : kExitLabels;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"algorec: algorithm recognition via AST search patterns"};
    app.require_subcommand(1);

    std::string catalogDir = defaultCatalogDir();
    app.add_option("--catalog", catalogDir, "catalog directory")
        ->capture_default_str();

    // scan
    auto* scan = app.add_subcommand("scan", "match patterns against a code base");
    std::string scanCorpus;
    std::vector<std::string> scanPatterns;
    bool scanJson = false, scanInject = false, scanStrict = false;
    std::string commentTemplate;
    std::size_t budget = defaultBudget();
    unsigned jobs = 1;
    scan->add_option("--corpus", scanCorpus, "directory of .java files")->required();
    scan->add_option("--pattern", scanPatterns,
                     "catalog name or pattern file (repeatable)")
        ->required();
    scan->add_flag("--json", scanJson, "machine-readable output");
    scan->add_flag("--inject-comments", scanInject,
                   "write a marker comment above each detected method");
    scan->add_option("--comment-template", commentTemplate,
                     "marker template ({algorithm}, {pattern}, {version})");
    scan->add_option("--budget", budget, "per-entry matching state budget")
        ->check(CLI::PositiveNumber);
    scan->add_option("--jobs", jobs, "parser/matcher threads")
        ->check(CLI::PositiveNumber);
    scan->add_flag("--strict", scanStrict,
                   "exit 2 when parse errors or budget diagnostics occurred");

    // bench
    auto* benchCmd = app.add_subcommand("bench", "evaluate against a labeled corpus");
    std::string benchCorpus, benchPattern, labelsPath, pairsPath, outPath;
    long minTokens = 0;
    benchCmd->add_option("--corpus", benchCorpus, "directory of .java files")
        ->required();
    benchCmd->add_option("--pattern", benchPattern, "catalog name or pattern file")
        ->required();
    benchCmd->add_option("--labels", labelsPath, "labels.csv")->required();
    benchCmd->add_option("--pairs", pairsPath, "pairs.csv (clone-pair recall)");
    benchCmd->add_option("--min-tokens", minTokens,
                         "minimum token length filter for clone pairs");
    benchCmd->add_option("--out", outPath, "write machine-readable report here");
    benchCmd->add_option("--budget", budget, "per-entry matching state budget")
        ->check(CLI::PositiveNumber);
    benchCmd->add_option("--jobs", jobs, "parser/matcher threads")
        ->check(CLI::PositiveNumber);

    // list / describe / dump
    auto* list = app.add_subcommand("list", "list catalog patterns");
    auto* describeCmd = app.add_subcommand("describe", "show a catalog pattern");
    std::string describeName;
    describeCmd->add_option("name", describeName, "catalog pattern name")->required();
    auto* dump = app.add_subcommand("dump", "debug-dump the normalized AST of a file");
    std::string dumpPath;
    dump->add_option("file", dumpPath, "a .java file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (scan->parsed()) {
            return runScan(scanCorpus, scanPatterns, catalogDir, scanJson, scanInject,
                           commentTemplate, budget, jobs, scanStrict);
        }
        if (benchCmd->parsed()) {
            return runBench(benchCorpus, benchPattern, catalogDir, labelsPath,
                            pairsPath, minTokens, outPath, budget, jobs);
        }
        if (list->parsed()) {
            for (const std::string& name : catalog::catalogNames()) {
                std::cout << name << "\n";
            }
            return kExitOk;
        }
        if (describeCmd->parsed()) {
            std::cout << catalog::describe(
                catalog::loadCatalogEntry(catalogDir, describeName));
            return kExitOk;
        }
        if (dump->parsed()) {
            java::CompilationUnit unit = java::parseFile(dumpPath);
            std::cout << dumpTree(unit.root);
            return kExitOk;
        }
    } catch (const java::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const java::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const bench::CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLabels;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
