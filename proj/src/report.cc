#include "lexiswitch/report.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "lexiswitch/csv.h"
#include "lexiswitch/error.h"
#include "lexiswitch/text.h"

namespace lexiswitch {

const char* display_name(Mode mode) {
  switch (mode) {
    case Mode::kZeroShot: return "Zero-shot";
    case Mode::kRag: return "RAG";
    case Mode::kBaseline: return "Baseline";
  }
  return "?";
}

std::vector<Mode> report_order(const std::map<Mode, SummaryStats>& stats) {
  std::vector<Mode> out;
  for (Mode m : {Mode::kZeroShot, Mode::kRag, Mode::kBaseline})
    if (stats.contains(m)) out.push_back(m);
  return out;
}

namespace {

std::size_t display_width(std::string_view s) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < s.size();) {
    i += text::decode(s, i).length;
    ++w;
  }
  return w;
}

// First column left-aligned, the rest right-aligned, two spaces apart.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = display_width(header[c]);
    for (const auto& r : rows) widths[c] = std::max(widths[c], display_width(r[c]));
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::string pad(widths[c] - display_width(cells[c]), ' ');
      if (c > 0) line += "  ";
      line += c == 0 ? cells[c] + pad : pad + cells[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return out;
}

std::string format_median(double v) {
  if (v == std::floor(v)) return fmt::format("{:.0f}", v);
  return fmt::format("{:.1f}", v);
}

std::string full(double v) { return fmt::format("{:.17g}", v); }

void require_stats(const std::map<Mode, SummaryStats>& stats) {
  if (stats.empty()) throw Error(ErrorKind::kEmptyGroup, "no summary statistics to report");
}

}  // namespace

std::string render_summary_text(const std::map<Mode, SummaryStats>& stats) {
  require_stats(stats);
  const auto order = report_order(stats);
  std::vector<std::vector<std::string>> edit_rows, cos_rows, corr_rows;
  for (Mode m : order) {
    const auto& s = stats.at(m);
    edit_rows.push_back({display_name(m), fmt::format("{}", s.n), format_median(s.median_edits),
                         fmt::format("{:.2f}", s.mean_edits), fmt::format("{:.1f}", s.pct_le_2),
                         fmt::format("{:.1f}", s.pct_le_5)});
    cos_rows.push_back({display_name(m), fmt::format("{}", s.n_cosine),
                        fmt::format("{:.3f}", s.mean_cosine), fmt::format("{:.3f}", s.median_cosine),
                        fmt::format("{:.3f}", s.p5_cosine)});
    corr_rows.push_back({display_name(m), fmt::format("{}", s.n_cosine),
                         s.pearson_r ? fmt::format("{:.2f}", *s.pearson_r) : std::string("n/a")});
  }
  std::string out = "Token-level edit distance\n";
  out += render_table({"Method", "N", "Median edits", "Mean edits", "% ≤2 edits", "% ≤5 edits"},
                      edit_rows);
  out += "\nCosine similarity between original and generated responses\n";
  out += render_table({"Method", "N", "Mean cosine", "Median cosine", "5th percentile"}, cos_rows);
  out += "\nPearson r between edit distance and cosine similarity\n";
  out += render_table({"Method", "N", "r"}, corr_rows);
  return out;
}

std::string render_summary_csv(const std::map<Mode, SummaryStats>& stats) {
  require_stats(stats);
  std::string out =
      "mode,n,median_edits,mean_edits,pct_le_2,pct_le_5,n_cosine,mean_cosine,median_cosine,"
      "p5_cosine,pearson_r\n";
  for (Mode m : report_order(stats)) {
    const auto& s = stats.at(m);
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", to_string(m), s.n, full(s.median_edits),
                       full(s.mean_edits), full(s.pct_le_2), full(s.pct_le_5), s.n_cosine,
                       full(s.mean_cosine), full(s.median_cosine), full(s.p5_cosine),
                       s.pearson_r ? full(*s.pearson_r) : std::string());
  }
  return out;
}

std::string render_scatter_csv(std::span<const EvalRecord> records) {
  std::string out = "mode,edit_distance,cosine\n";
  for (const auto& r : records)
    out += fmt::format("{},{},{}\n", to_string(r.mode), r.edit_distance,
                       r.cosine ? full(*r.cosine) : std::string());
  return out;
}

std::string render_report_meta(const std::map<Mode, SummaryStats>& stats,
                               std::span<const EvalRecord> records, const ReportOptions& options) {
  nlohmann::ordered_json j;
  j["format"] = "lexiswitch.report";
  j["version"] = 1;
  j["record_count"] = records.size();
  auto modes = nlohmann::ordered_json::array();
  for (Mode m : report_order(stats)) modes.push_back(to_string(m));
  j["modes"] = std::move(modes);
  j["embedder"] = options.embedder;
  j["edit_distance"] = "token-level Levenshtein over lowercased tokens, punctuation kept";
  j["median"] = "middle value; mean of the two middle values for even n";
  j["percentile"] = "nearest rank: the ceil(0.05 n)-th smallest cosine";
  j["thresholds"] = "inclusive (an item with exactly k edits counts toward % <= k)";
  j["correlation"] = "sample Pearson r over records with a cosine; empty when undefined";
  if (options.x_axis_cap)
    j["scatter_x_axis_cap"] = *options.x_axis_cap;
  else
    j["scatter_x_axis_cap"] = nullptr;
  j["scatter_x_axis_cap_note"] = "display hint only; scatter.csv is never truncated";
  return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kMissingFile, fmt::format("cannot open {}", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, fmt::format("cannot write {}", path.string()));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::kIo, fmt::format("write failed for {}", path.string()));
}

void export_report(const std::map<Mode, SummaryStats>& stats, std::span<const EvalRecord> records,
                   const std::filesystem::path& out_dir, const ReportOptions& options) {
  require_stats(stats);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::kIo, fmt::format("cannot create {}: {}", out_dir.string(), ec.message()));
  write_file(out_dir / "summary.txt", render_summary_text(stats));
  write_file(out_dir / "summary.csv", render_summary_csv(stats));
  write_file(out_dir / "scatter.csv", render_scatter_csv(records));
  write_file(out_dir / "report_meta.json", render_report_meta(stats, records, options));
}

namespace {

template <typename F>
void for_each_jsonl(const std::filesystem::path& path, F&& f) {
  const auto content = read_file(path);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    auto nl = content.find('\n', pos);
    if (nl == std::string::npos) nl = content.size();
    ++line_no;
    const auto line = text::trim(std::string_view(content).substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty()) continue;
    try {
      f(nlohmann::json::parse(line), line_no);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(path.string(), line_no, e.what());
    }
  }
}

}  // namespace

std::vector<RewriteTrace> load_traces(const std::filesystem::path& path) {
  std::vector<RewriteTrace> out;
  for_each_jsonl(path, [&](const nlohmann::json& j, std::size_t) { out.push_back(RewriteTrace::from_json(j)); });
  return out;
}

std::vector<PairRecord> load_pairs(const std::filesystem::path& path) {
  std::vector<PairRecord> out;
  if (path.extension() == ".csv") {
    const auto rows = csv::parse(read_file(path), path.string());
    if (rows.empty()) return out;
    const auto& header = rows.front().fields;
    const std::vector<std::string> expected{"id", "mode", "original", "generated"};
    if (header != expected)
      throw ParseError(path.string(), rows.front().line, "header must be id,mode,original,generated");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& r = rows[i];
      if (r.fields.size() != 4)
        throw ParseError(path.string(), r.line, fmt::format("expected 4 fields, got {}", r.fields.size()));
      try {
        out.push_back({r.fields[0], parse_mode(r.fields[1]), r.fields[2], r.fields[3]});
      } catch (const Error& e) {
        throw ParseError(path.string(), r.line, e.what());
      }
    }
    return out;
  }
  for_each_jsonl(path, [&](const nlohmann::json& j, std::size_t) {
    out.push_back({j.at("id").get<std::string>(), parse_mode(j.at("mode").get<std::string>()),
                   j.at("original").get<std::string>(), j.at("generated").get<std::string>()});
  });
  return out;
}

std::vector<PairRecord> pairs_from_traces(std::span<const RewriteTrace> traces) {
  std::vector<PairRecord> out;
  for (const auto& t : traces) out.push_back({t.id, t.mode, t.base_response, t.final_response});
  return out;
}

}  // namespace lexiswitch
