#include "lexiswitch/pos_tagger.h"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <fstream>
#include <unordered_map>

#include <fmt/format.h>

#include "lexiswitch/error.h"
#include "lexiswitch/text.h"

namespace lexiswitch {

namespace {

constexpr std::array<std::pair<PosTag, const char*>, 17> kTagNames{{
    {PosTag::kAdj, "ADJ"},     {PosTag::kAdp, "ADP"},     {PosTag::kAdv, "ADV"},
    {PosTag::kAux, "AUX"},     {PosTag::kCconj, "CCONJ"}, {PosTag::kDet, "DET"},
    {PosTag::kIntj, "INTJ"},   {PosTag::kNoun, "NOUN"},   {PosTag::kNum, "NUM"},
    {PosTag::kPart, "PART"},   {PosTag::kPron, "PRON"},   {PosTag::kPropn, "PROPN"},
    {PosTag::kPunct, "PUNCT"}, {PosTag::kSconj, "SCONJ"}, {PosTag::kSym, "SYM"},
    {PosTag::kVerb, "VERB"},   {PosTag::kX, "X"},
}};

}  // namespace

const char* to_string(PosTag tag) {
  for (const auto& [t, name] : kTagNames)
    if (t == tag) return name;
  return "X";
}

std::optional<PosTag> parse_pos_tag(std::string_view label) {
  std::string upper = text::trim(label);
  for (char& c : upper)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  for (const auto& [t, name] : kTagNames)
    if (upper == name) return t;
  return std::nullopt;
}

bool is_content_tag(PosTag tag) {
  return tag == PosTag::kNoun || tag == PosTag::kPropn || tag == PosTag::kVerb ||
         tag == PosTag::kAdj || tag == PosTag::kAdv;
}

// ---------------------------------------------------------------------------
// Baseline tagger

namespace {

const std::unordered_map<std::string, PosTag>& closed_class() {
  static const auto* table = [] {
    auto* m = new std::unordered_map<std::string, PosTag>;
    auto add = [m](PosTag tag, std::initializer_list<const char*> words) {
      for (const char* w : words) m->emplace(w, tag);
    };
    add(PosTag::kDet, {"the", "a", "an", "this", "these", "those", "every", "each", "some", "any",
                       "no", "all", "both", "either", "neither", "another", "such", "my",
                       "your", "his", "its", "our", "their", "whose", "much", "many", "few",
                       "several"});
    add(PosTag::kPron, {"i", "me", "you", "he", "him", "she", "her", "it", "we", "us", "they",
                        "them", "myself", "yourself", "yourselves", "himself", "herself",
                        "itself", "ourselves", "themselves", "mine", "yours", "hers", "ours",
                        "theirs", "who", "whom", "what", "which", "that", "anyone", "anything",
                        "anybody", "everyone", "everything", "everybody", "someone",
                        "something", "somebody", "nobody", "nothing", "none", "y'all"});
    add(PosTag::kAdp, {"of", "in", "on", "at", "by", "for", "with", "about", "against",
                       "between", "into", "through", "during", "before", "after", "above",
                       "below", "to", "from", "up", "down", "over", "under", "around",
                       "across", "without", "within", "along", "behind", "beyond", "near",
                       "off", "out", "since", "until", "upon", "among", "toward", "towards",
                       "via", "per"});
    add(PosTag::kAux, {"be", "is", "am", "are", "was", "were", "been", "being", "have", "has",
                       "had", "having", "do", "does", "did", "will", "would", "shall",
                       "should", "can", "could", "may", "might", "must", "ca", "wo", "ai",
                       "'re", "'m", "'ve", "'ll", "'d", "’re", "’m", "’ve", "’ll", "’d"});
    add(PosTag::kPart, {"not", "n't", "n’t", "'s", "’s"});
    add(PosTag::kCconj, {"and", "or", "but", "nor"});
    add(PosTag::kSconj, {"if", "because", "although", "though", "while", "whereas", "unless",
                         "whether", "than", "as", "once"});
    add(PosTag::kIntj, {"hi", "hello", "hey", "oh", "ah", "wow", "yes", "okay", "ok", "please",
                        "thanks", "bye", "oops", "yeah", "yay", "hmm"});
    add(PosTag::kAdv, {"very", "really", "just", "also", "too", "so", "quite", "rather",
                       "never", "always", "often", "sometimes", "here", "there", "now",
                       "then", "again", "still", "already", "even", "only", "almost",
                       "soon", "well", "yet", "perhaps", "maybe", "how", "when", "where",
                       "why", "ever", "away", "else", "together", "anyway"});
    add(PosTag::kNum, {"one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
                       "ten", "hundred", "thousand", "million"});
    return m;
  }();
  return *table;
}

bool is_modal_or_infinitive_marker(std::string_view w) {
  static const std::unordered_set<std::string_view> kWords{
      "to", "can", "could", "will", "would", "shall", "should", "may", "might", "must",
      "do", "does", "did", "n't", "n’t", "'ll", "’ll", "'d", "’d", "ca", "wo"};
  return kWords.contains(w);
}

bool is_linking_verb(std::string_view w) {
  static const std::unordered_set<std::string_view> kWords{
      "feel", "feels", "felt", "feeling", "seem", "seems", "seemed", "look", "looks",
      "looked", "sound", "sounds", "sounded", "become", "becomes", "became", "get", "gets",
      "got", "be", "is", "am", "are", "was", "were", "been", "being", "'m", "'re", "’m", "’re"};
  return kWords.contains(w);
}

bool is_third_person_subject(std::string_view w) {
  static const std::unordered_set<std::string_view> kWords{
      "he", "she", "it", "that", "this", "who", "which", "what", "there", "everyone",
      "everything", "someone", "something", "nobody", "nothing"};
  return kWords.contains(w);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool any_suffix(std::string_view s, std::initializer_list<std::string_view> suffixes,
                std::size_t min_stem = 2) {
  for (auto suf : suffixes)
    if (s.size() >= suf.size() + min_stem && ends_with(s, suf)) return true;
  return false;
}

bool starts_uppercase(std::string_view surface) {
  if (surface.empty()) return false;
  const auto d = text::decode(surface, 0);
  return d.valid && text::is_uppercase(d.code_point);
}

bool is_sentence_end(const Token& t) {
  return t.kind == TokenKind::kPunctuation && (t.lower == "." || t.lower == "!" || t.lower == "?");
}

}  // namespace

std::vector<PosTag> baseline_tag(std::span<const Token> tokens) {
  static const std::unordered_set<std::string_view> kLyNouns{
      "family", "reply", "supply", "belly", "ally", "rally", "jelly", "bully",
      "lily", "july", "assembly", "anomaly", "fly"};
  static const std::unordered_set<std::string_view> kLyAdjectives{
      "holy", "ugly", "lovely", "friendly", "lonely", "silly", "likely", "early",
      "daily", "melancholy", "costly", "elderly", "lively", "smelly"};

  std::vector<PosTag> tags(tokens.size(), PosTag::kNoun);

  // Sentence boundaries and how many word tokens each sentence holds.
  std::vector<bool> sentence_initial(tokens.size(), false);
  std::vector<std::size_t> sentence_words(tokens.size(), 0);
  {
    bool at_start = true;
    std::size_t begin = 0;
    auto close = [&](std::size_t end) {
      std::size_t words = 0;
      for (std::size_t j = begin; j < end; ++j) words += tokens[j].kind == TokenKind::kWord;
      for (std::size_t j = begin; j < end; ++j) sentence_words[j] = words;
      begin = end;
    };
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      if (t.kind == TokenKind::kWord || t.kind == TokenKind::kNumber) {
        sentence_initial[i] = at_start;
        at_start = false;
      } else if (is_sentence_end(t)) {
        at_start = true;
        close(i + 1);
      }
    }
    close(tokens.size());
  }

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    switch (t.kind) {
      case TokenKind::kPunctuation: tags[i] = PosTag::kPunct; continue;
      case TokenKind::kSymbol: tags[i] = PosTag::kSym; continue;
      case TokenKind::kNumber: tags[i] = PosTag::kNum; continue;
      case TokenKind::kWord: break;
    }

    const std::string_view w = t.lower;
    if (auto it = closed_class().find(t.lower); it != closed_class().end()) {
      tags[i] = it->second;
      continue;
    }

    if (starts_uppercase(t.surface) && (!sentence_initial[i] || sentence_words[i] == 1)) {
      tags[i] = PosTag::kPropn;
      continue;
    }

    // Context is the immediately preceding token; punctuation breaks it.
    const Token* prev = (i > 0 && tokens[i - 1].kind == TokenKind::kWord) ? &tokens[i - 1] : nullptr;
    const PosTag prev_tag = prev ? tags[i - 1] : PosTag::kPunct;
    const std::string_view prev_lower = prev ? std::string_view(prev->lower) : std::string_view{};

    if (kLyNouns.contains(w)) {
      tags[i] = PosTag::kNoun;
    } else if (kLyAdjectives.contains(w)) {
      tags[i] = PosTag::kAdj;
    } else if (w.size() > 3 && ends_with(w, "ly")) {
      tags[i] = PosTag::kAdv;
    } else if (prev && is_modal_or_infinitive_marker(prev_lower)) {
      tags[i] = PosTag::kVerb;
    } else if (any_suffix(w, {"ing"})) {
      if (prev_tag == PosTag::kDet || prev_tag == PosTag::kAdj)
        tags[i] = PosTag::kNoun;
      else if (prev_tag == PosTag::kAdv || (prev && is_linking_verb(prev_lower)))
        tags[i] = PosTag::kAdj;
      else
        tags[i] = PosTag::kVerb;
    } else if (any_suffix(w, {"ed"})) {
      if (prev_tag == PosTag::kDet || prev_tag == PosTag::kAdv ||
          (prev && is_linking_verb(prev_lower)))
        tags[i] = PosTag::kAdj;
      else
        tags[i] = PosTag::kVerb;
    } else if (any_suffix(w, {"ness", "tion", "sion", "ment", "ity", "ship", "ance", "ence"})) {
      tags[i] = PosTag::kNoun;
    } else if (any_suffix(w, {"able", "ible", "ful", "ous", "ive", "less", "ish", "ical"})) {
      tags[i] = PosTag::kAdj;
    } else if (ends_with(w, "s") && prev && is_third_person_subject(prev_lower)) {
      tags[i] = PosTag::kVerb;
    } else {
      tags[i] = PosTag::kNoun;
    }
  }
  return tags;
}

std::vector<PosTag> BaselineTagger::tag(std::span<const Token> tokens) const {
  return baseline_tag(tokens);
}

// ---------------------------------------------------------------------------
// External tagger process

struct ExternalProcessTagger::Process {
  pid_t pid = -1;
  int to_child = -1;
  int from_child = -1;
  std::string buffer;

  ~Process() {
    if (to_child >= 0) ::close(to_child);
    if (from_child >= 0) ::close(from_child);
    if (pid > 0) {
      int status = 0;
      ::waitpid(pid, &status, 0);
    }
  }

  void write_all(std::string_view data) {
    while (!data.empty()) {
      const ssize_t n = ::write(to_child, data.data(), data.size());
      if (n < 0) {
        if (errno == EINTR) continue;
        throw Error(ErrorKind::kIo, "failed writing to external tagger");
      }
      data.remove_prefix(static_cast<std::size_t>(n));
    }
  }

  std::string read_line() {
    for (;;) {
      if (auto nl = buffer.find('\n'); nl != std::string::npos) {
        std::string line = buffer.substr(0, nl);
        buffer.erase(0, nl + 1);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
      }
      char chunk[4096];
      const ssize_t n = ::read(from_child, chunk, sizeof chunk);
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) throw Error(ErrorKind::kIo, "external tagger closed its output");
      buffer.append(chunk, static_cast<std::size_t>(n));
    }
  }
};

ExternalProcessTagger::ExternalProcessTagger(std::string command) : command_(std::move(command)) {
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe(in_pipe) != 0) throw Error(ErrorKind::kIo, "pipe() failed");
  if (::pipe(out_pipe) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw Error(ErrorKind::kIo, "pipe() failed");
  }
  ::signal(SIGPIPE, SIG_IGN);
  const pid_t pid = ::fork();
  if (pid < 0) throw Error(ErrorKind::kIo, "fork() failed");
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    ::close(out_pipe[1]);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  ::fcntl(in_pipe[1], F_SETFD, FD_CLOEXEC);
  ::fcntl(out_pipe[0], F_SETFD, FD_CLOEXEC);
  process_ = std::make_unique<Process>();
  process_->pid = pid;
  process_->to_child = in_pipe[1];
  process_->from_child = out_pipe[0];
}

ExternalProcessTagger::~ExternalProcessTagger() = default;

std::vector<PosTag> ExternalProcessTagger::tag(std::span<const Token> tokens) const {
  std::lock_guard lock(mutex_);
  if (tokens.empty()) return {};
  std::string request;
  for (const Token& t : tokens) {
    request += t.surface;
    request += '\n';
  }
  request += '\n';
  process_->write_all(request);

  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string line = process_->read_line();
    if (line.empty())
      throw Error(ErrorKind::kTaggerMisalignment,
                  fmt::format("external tagger returned {} tags for {} tokens", i, tokens.size()));
    tags.push_back(parse_pos_tag(line).value_or(PosTag::kX));
  }
  if (!process_->read_line().empty())
    throw Error(ErrorKind::kTaggerMisalignment, "external tagger returned extra tags");
  return tags;
}

// ---------------------------------------------------------------------------
// Stoplist and extraction

Stoplist Stoplist::defaults() {
  return Stoplist({
      "be", "is", "am", "are", "was", "were", "been", "being", "have", "has", "had", "having",
      "do", "does", "did", "doing", "done", "will", "would", "shall", "should", "can", "could",
      "may", "might", "must", "get", "gets", "got", "getting", "gotten", "make", "makes", "made",
      "making", "go", "goes", "going", "went", "gone", "let", "lets", "put", "take", "takes",
      "took", "give", "gives", "gave", "come", "comes", "came", "say", "says", "said", "tell",
      "told", "know", "knows", "knew", "think", "thinks", "thought", "want", "wants", "need",
      "needs", "seem", "seems", "use", "used", "using", "really", "very", "just", "also", "so",
      "too", "quite", "rather", "pretty", "there", "here", "now", "then", "well", "even", "still",
      "yet", "ever", "never", "always", "often", "again", "already", "only", "almost", "maybe",
      "perhaps", "much", "many", "more", "most", "less", "least", "lot", "lots", "thing",
      "things", "stuff", "way", "ways", "bit", "kind", "sort", "something", "anything",
      "everything", "nothing", "someone", "anyone", "everyone", "yes", "no", "not", "hi",
      "hello", "hey", "okay", "ok", "oh", "like", "sure", "right", "one", "ones", "else",
      "etc", "sometimes", "actually", "basically", "definitely", "probably", "certainly"});
}

Stoplist Stoplist::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kMissingFile, path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto w = text::to_lower(text::trim(line));
    if (!w.empty() && w.front() != '#') words.insert(std::move(w));
  }
  return Stoplist(std::move(words));
}

std::vector<ContentWord> extract_content_words(std::span<const Token> tokens,
                                               std::span<const PosTag> tags,
                                               const Stoplist& stoplist) {
  if (tags.size() != tokens.size())
    throw Error(ErrorKind::kTaggerMisalignment,
                fmt::format("{} tags for {} tokens", tags.size(), tokens.size()));
  std::vector<ContentWord> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kWord || !is_content_tag(tags[i])) continue;
    if (stoplist.contains(tokens[i].lower)) continue;
    out.push_back({i, tokens[i].lower, tags[i]});
  }
  return out;
}

std::vector<ContentWord> extract_content_words(std::span<const Token> tokens,
                                               const PosTagger& tagger,
                                               const Stoplist& stoplist) {
  const auto tags = tagger.tag(tokens);
  return extract_content_words(tokens, tags, stoplist);
}

}  // namespace lexiswitch
