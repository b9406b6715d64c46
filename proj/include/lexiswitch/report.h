#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexiswitch/metrics.h"
#include "lexiswitch/pipeline.h"

namespace lexiswitch {

// "Zero-shot", "RAG", "Baseline".
const char* display_name(Mode mode);

// Row order used by every report: zero-shot, rag, baseline (those present).
std::vector<Mode> report_order(const std::map<Mode, SummaryStats>& stats);

// Two fixed-width tables (edit minimality, semantic faithfulness) and the
// per-mode correlation, rounded for reading.
std::string render_summary_text(const std::map<Mode, SummaryStats>& stats);
// Full-precision values, one row per mode.
std::string render_summary_csv(const std::map<Mode, SummaryStats>& stats);
// `mode,edit_distance,cosine` per record in input order.
std::string render_scatter_csv(std::span<const EvalRecord> records);

struct ReportOptions {
  // Plotting hint for the scatter data; recorded, never applied.
  std::optional<double> x_axis_cap;
  std::string embedder;
};

std::string render_report_meta(const std::map<Mode, SummaryStats>& stats,
                               std::span<const EvalRecord> records, const ReportOptions& options);

// Writes summary.txt, summary.csv, scatter.csv and report_meta.json into
// `out_dir`. Throws EmptyGroup for empty stats, IoError on write failure.
void export_report(const std::map<Mode, SummaryStats>& stats, std::span<const EvalRecord> records,
                   const std::filesystem::path& out_dir, const ReportOptions& options = {});

struct PairRecord {
  std::string id;
  Mode mode = Mode::kBaseline;
  std::string original;
  std::string generated;
};

// One RewriteTrace per non-blank line. Throws ParseError with the line number.
std::vector<RewriteTrace> load_traces(const std::filesystem::path& path);

// `id,mode,original,generated` as CSV with a header row (.csv) or JSONL
// objects with those keys (anything else). Throws ParseError with the line.
std::vector<PairRecord> load_pairs(const std::filesystem::path& path);

std::vector<PairRecord> pairs_from_traces(std::span<const RewriteTrace> traces);

// Reads a whole file; throws MissingFile.
std::string read_file(const std::filesystem::path& path);
// Writes a whole file in binary mode; throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace lexiswitch
