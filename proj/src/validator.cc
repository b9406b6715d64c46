#include "lexiswitch/validator.h"

#include <algorithm>
#include <unordered_set>

#include "lexiswitch/text.h"
#include "lexiswitch/variety.h"

namespace lexiswitch {

namespace {

struct Cost {
  std::size_t edits = 0;
  std::size_t spans = 0;
  friend auto operator<=>(const Cost&, const Cost&) = default;
};

constexpr Cost kInfinite{static_cast<std::size_t>(-1) / 2, 0};

}  // namespace

Alignment align_tokens(std::span<const std::string> base, std::span<const std::string> final) {
  const std::size_t n = base.size();
  const std::size_t m = final.size();
  const std::size_t width = m + 1;
  // best[(i * width + j) * 2 + s]: cheapest finish from (i, j) when the previous
  // step was a match or the start (s = 0) or an edit (s = 1).
  std::vector<Cost> best((n + 1) * width * 2, kInfinite);
  auto at = [&](std::size_t i, std::size_t j, int s) -> Cost& { return best[(i * width + j) * 2 + s]; };

  auto edit_from = [](Cost next, int s) { return Cost{next.edits + 1, next.spans + (s == 0 ? 1 : 0)}; };

  for (std::size_t ii = n + 1; ii-- > 0;) {
    for (std::size_t jj = m + 1; jj-- > 0;) {
      for (int s = 0; s < 2; ++s) {
        if (ii == n && jj == m) {
          at(ii, jj, s) = {};
          continue;
        }
        Cost c = kInfinite;
        if (ii < n && jj < m) {
          if (base[ii] == final[jj]) c = std::min(c, at(ii + 1, jj + 1, 0));
          c = std::min(c, edit_from(at(ii + 1, jj + 1, 1), s));
        }
        if (ii < n) c = std::min(c, edit_from(at(ii + 1, jj, 1), s));
        if (jj < m) c = std::min(c, edit_from(at(ii, jj + 1, 1), s));
        at(ii, jj, s) = c;
      }
    }
  }

  Alignment out;
  out.edits = at(0, 0, 0).edits;
  std::size_t i = 0;
  std::size_t j = 0;
  int s = 0;
  EditSpan open{};
  bool in_span = false;
  auto step_edit = [&](std::size_t ni, std::size_t nj) {
    if (!in_span) {
      open = {i, i, j, j};
      in_span = true;
    }
    i = ni;
    j = nj;
    open.base_end = i;
    open.final_end = j;
    s = 1;
  };
  while (i < n || j < m) {
    const Cost target = at(i, j, s);
    if (i < n && j < m && base[i] == final[j] && at(i + 1, j + 1, 0) == target) {
      if (in_span) {
        out.spans.push_back(open);
        in_span = false;
      }
      ++i;
      ++j;
      s = 0;
    } else if (i < n && j < m && edit_from(at(i + 1, j + 1, 1), s) == target) {
      step_edit(i + 1, j + 1);
    } else if (i < n && edit_from(at(i + 1, j, 1), s) == target) {
      step_edit(i + 1, j);
    } else {
      step_edit(i, j + 1);
    }
  }
  if (in_span) out.spans.push_back(open);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> split_sentences(std::string_view text,
                                                                 std::span<const Token> tokens) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (t.kind != TokenKind::kPunctuation || (t.lower != "." && t.lower != "!" && t.lower != "?"))
      continue;
    bool followed_by_space = t.end >= text.size();
    if (!followed_by_space) {
      const auto d = text::decode(text, t.end);
      followed_by_space = d.valid && text::classify(d.code_point) == text::CharClass::kSpace;
    }
    if (followed_by_space) {
      out.emplace_back(begin, i + 1);
      begin = i + 1;
    }
  }
  if (begin < tokens.size()) out.emplace_back(begin, tokens.size());
  return out;
}

std::size_t ValidationReport::total_spans() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.spans.size();
  return n;
}

bool ValidationReport::ok() const {
  return particle_violations.empty() && over_budget_sentences.empty() && nonlocal_spans.empty() &&
         !sentence_count_changed;
}

bool operator==(const SentenceSpans& a, const SentenceSpans& b) {
  return a.sentence == b.sentence && a.spans == b.spans;
}

bool operator==(const ValidationReport& a, const ValidationReport& b) {
  return a.particle_violations == b.particle_violations && a.sentences == b.sentences &&
         a.over_budget_sentences == b.over_budget_sentences &&
         a.nonlocal_spans == b.nonlocal_spans &&
         a.sentence_count_changed == b.sentence_count_changed && a.token_edits == b.token_edits;
}

namespace {

nlohmann::ordered_json span_json(const EditSpan& s) {
  return nlohmann::ordered_json::array({s.base_begin, s.base_end, s.final_begin, s.final_end});
}

EditSpan span_from_json(const nlohmann::json& j) {
  return {j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>(), j.at(2).get<std::size_t>(),
          j.at(3).get<std::size_t>()};
}

}  // namespace

nlohmann::ordered_json ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok();
  j["token_edits"] = token_edits;
  j["particle_violations"] = particle_violations;
  auto counts = nlohmann::ordered_json::array();
  auto spans = nlohmann::ordered_json::array();
  for (const auto& s : sentences) {
    counts.push_back(s.spans.size());
    auto list = nlohmann::ordered_json::array();
    for (const auto& e : s.spans) list.push_back(span_json(e));
    spans.push_back(std::move(list));
  }
  j["sentence_span_counts"] = std::move(counts);
  j["sentence_spans"] = std::move(spans);
  j["over_budget_sentences"] = over_budget_sentences;
  auto nonlocal = nlohmann::ordered_json::array();
  for (const auto& e : nonlocal_spans) nonlocal.push_back(span_json(e));
  j["nonlocal_spans"] = std::move(nonlocal);
  j["sentence_count_changed"] = sentence_count_changed;
  return j;
}

ValidationReport ValidationReport::from_json(const nlohmann::json& j) {
  ValidationReport r;
  r.token_edits = j.at("token_edits").get<std::size_t>();
  r.particle_violations = j.at("particle_violations").get<std::vector<std::string>>();
  const auto& spans = j.at("sentence_spans");
  for (std::size_t i = 0; i < spans.size(); ++i) {
    SentenceSpans s{i, {}};
    for (const auto& e : spans[i]) s.spans.push_back(span_from_json(e));
    r.sentences.push_back(std::move(s));
  }
  r.over_budget_sentences = j.at("over_budget_sentences").get<std::vector<std::size_t>>();
  for (const auto& e : j.at("nonlocal_spans")) r.nonlocal_spans.push_back(span_from_json(e));
  r.sentence_count_changed = j.at("sentence_count_changed").get<bool>();
  return r;
}

ValidationReport validate_rewrite(std::string_view base, std::string_view final,
                                  const VarietyConfig& config) {
  ValidationReport report;
  const auto base_tokens = tokenize(base);
  const auto final_tokens = tokenize(final);
  std::vector<std::string> base_lower;
  std::vector<std::string> final_lower;
  for (const auto& t : base_tokens) base_lower.push_back(t.lower);
  for (const auto& t : final_tokens) final_lower.push_back(t.lower);

  // (a) particles introduced by the rewrite
  {
    std::unordered_set<std::string> in_base(base_lower.begin(), base_lower.end());
    std::set<std::string> found;
    for (const auto& t : final_tokens)
      if (t.kind == TokenKind::kWord && config.particle_blocklist.contains(t.lower) &&
          !in_base.contains(t.lower))
        found.insert(t.lower);
    report.particle_violations.assign(found.begin(), found.end());
  }

  // (b) changed spans per base sentence
  auto base_sentences = split_sentences(base, base_tokens);
  const auto final_sentences = split_sentences(final, final_tokens);
  if (base_sentences.empty()) base_sentences.emplace_back(0, 0);
  for (std::size_t i = 0; i < base_sentences.size(); ++i) report.sentences.push_back({i, {}});

  const auto whole = align_tokens(base_lower, final_lower);
  report.token_edits = whole.edits;

  if (base_sentences.size() == final_sentences.size()) {
    for (std::size_t i = 0; i < base_sentences.size(); ++i) {
      const auto [bb, be] = base_sentences[i];
      const auto [fb, fe] = final_sentences[i];
      const auto local = align_tokens(std::span(base_lower).subspan(bb, be - bb),
                                      std::span(final_lower).subspan(fb, fe - fb));
      for (auto span : local.spans) {
        span.base_begin += bb;
        span.base_end += bb;
        span.final_begin += fb;
        span.final_end += fb;
        report.sentences[i].spans.push_back(span);
      }
    }
  } else {
    report.sentence_count_changed = true;
    for (const auto& span : whole.spans) {
      std::size_t owner = base_sentences.size() - 1;
      for (std::size_t i = 0; i < base_sentences.size(); ++i)
        if (span.base_begin < base_sentences[i].second) {
          owner = i;
          break;
        }
      report.sentences[owner].spans.push_back(span);
    }
  }

  // (c) locality of each change
  for (const auto& s : report.sentences) {
    if (s.spans.size() > config.max_substitutions_per_sentence)
      report.over_budget_sentences.push_back(s.sentence);
    for (const auto& span : s.spans)
      if (span.base_end - span.base_begin > config.max_span_tokens ||
          span.final_end - span.final_begin > config.max_span_tokens)
        report.nonlocal_spans.push_back(span);
  }
  return report;
}

}  // namespace lexiswitch
