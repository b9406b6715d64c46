#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "lexiswitch/error.h"
#include "lexiswitch/pos_tagger.h"
#include "lexiswitch/text.h"
#include "lexiswitch/tokenizer.h"
#include "test_support.h"

namespace lexiswitch {
namespace {

std::vector<std::string> lowers(std::string_view s) { return lowered_tokens(s); }

std::vector<TokenKind> kinds(std::string_view s) {
  std::vector<TokenKind> out;
  for (const auto& t : tokenize(s)) out.push_back(t.kind);
  return out;
}

std::vector<PosTag> tags_of(std::string_view s) { return baseline_tag(tokenize(s)); }

TEST(Tokenizer, EmptyInput) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenizer, HyphenatedCompoundSplits) {
  using K = TokenKind;
  EXPECT_EQ(lowers("Back-to-back meetings!"),
            (std::vector<std::string>{"back", "-", "to", "-", "back", "meetings", "!"}));
  EXPECT_EQ(kinds("Back-to-back meetings!"),
            (std::vector<K>{K::kWord, K::kPunctuation, K::kWord, K::kPunctuation, K::kWord, K::kWord,
                            K::kPunctuation}));
}

TEST(Tokenizer, ContractionsKeepApostropheOnSuffix) {
  EXPECT_EQ(lowers("don't"), (std::vector<std::string>{"do", "n't"}));
  EXPECT_EQ(lowers("it's"), (std::vector<std::string>{"it", "'s"}));
  EXPECT_EQ(lowers("Can't stop"), (std::vector<std::string>{"ca", "n't", "stop"}));
  EXPECT_EQ(lowers("we're"), (std::vector<std::string>{"we", "'re"}));
  EXPECT_EQ(lowers("it\xE2\x80\x99s"), (std::vector<std::string>{"it", "\xE2\x80\x99s"}));
}

TEST(Tokenizer, NumbersKeepInnerSeparators) {
  const auto t = tokenize("pay 1,000.50 now, 3.");
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t[1].surface, "1,000.50");
  EXPECT_EQ(t[1].kind, TokenKind::kNumber);
  EXPECT_EQ(t[3].kind, TokenKind::kPunctuation);
  EXPECT_EQ(t[4].surface, "3");
  EXPECT_EQ(t[5].surface, ".");
}

TEST(Tokenizer, SymbolsAndPunctuationAreSingleTokens) {
  const auto t = tokenize("a+b = $5?!");
  std::vector<std::string> surfaces;
  for (const auto& tok : t) surfaces.push_back(tok.surface);
  EXPECT_EQ(surfaces, (std::vector<std::string>{"a", "+", "b", "=", "$", "5", "?", "!"}));
  EXPECT_EQ(t[1].kind, TokenKind::kSymbol);
  EXPECT_EQ(t[6].kind, TokenKind::kPunctuation);
}

TEST(Tokenizer, LowerFieldIsLowercasedSurface) {
  for (const auto& t : tokenize("Hello WORLD Ärger Ωmega"))
    EXPECT_EQ(t.lower, text::to_lower(t.surface));
  EXPECT_EQ(lowers("Ärger"), (std::vector<std::string>{"ärger"}));
}

// Random strings over a mixed pool of ASCII, Latin-1, CJK, emoji, spaces and
// punctuation: every token is a verbatim slice, tokens are ordered and
// disjoint, and only whitespace falls between them.
TEST(Tokenizer, LosslessOnRandomUnicode) {
  const std::vector<std::string> pool{"a",  "Z",  "7",  " ",  "\t", "\n", ".",  ",",  "-",  "'",
                                      "!",  "$",  "é",  "ß",  "中", "文", "😀", "\xE2\x80\x99",
                                      "\xC2\xA0", "\xE2\x80\x94", "n",  "t", "s"};
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    std::string s;
    const int len = static_cast<int>(rng() % 24);
    for (int i = 0; i < len; ++i) s += pool[rng() % pool.size()];
    const auto toks = tokenize(s);
    std::size_t prev = 0;
    for (const auto& t : toks) {
      ASSERT_LT(t.start, t.end) << s;
      ASSERT_LE(prev, t.start) << s;
      ASSERT_EQ(std::string_view(s).substr(t.start, t.end - t.start), t.surface) << s;
      for (std::size_t i = prev; i < t.start;) {
        const auto d = text::decode(s, i);
        ASSERT_EQ(text::classify(d.code_point), text::CharClass::kSpace) << s;
        i += d.length;
      }
      prev = t.end;
    }
    for (std::size_t i = prev; i < s.size();) {
      const auto d = text::decode(s, i);
      ASSERT_EQ(text::classify(d.code_point), text::CharClass::kSpace) << s;
      i += d.length;
    }
  }
}

TEST(BaselineTagger, ClosedClassAndSuffixRules) {
  EXPECT_EQ(tags_of("quickly"), (std::vector<PosTag>{PosTag::kAdv}));
  EXPECT_EQ(tags_of("the meeting"), (std::vector<PosTag>{PosTag::kDet, PosTag::kNoun}));
  EXPECT_EQ(tags_of("is"), (std::vector<PosTag>{PosTag::kAux}));
  EXPECT_EQ(tags_of("Paris"), (std::vector<PosTag>{PosTag::kPropn}));
  EXPECT_EQ(tags_of("We visited Paris."),
            (std::vector<PosTag>{PosTag::kPron, PosTag::kVerb, PosTag::kPropn, PosTag::kPunct}));
  EXPECT_EQ(tags_of("a friendly dog"),
            (std::vector<PosTag>{PosTag::kDet, PosTag::kAdj, PosTag::kNoun}));
}

TEST(BaselineTagger, OutputAlignsAndStaysInTagSet) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> words{"the", "Quick", "running", "tired", "happiness", "to",
                                       "ran", "42", "!", "she", "really", "don't", "Tokyo"};
  for (int iter = 0; iter < 200; ++iter) {
    std::string s;
    for (int i = 0, n = static_cast<int>(rng() % 12); i < n; ++i) s += words[rng() % words.size()] + " ";
    const auto toks = tokenize(s);
    const auto tags = baseline_tag(toks);
    ASSERT_EQ(tags.size(), toks.size());
    for (PosTag t : tags) EXPECT_EQ(parse_pos_tag(to_string(t)), t);
  }
}

TEST(ContentWords, WorkedExampleDropsStoplistedAdverb) {
  const auto toks = tokenize("that sounds really exhausting");
  const auto words = extract_content_words(toks, BaselineTagger{}, Stoplist::defaults());
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[0], (ContentWord{1, "sounds", PosTag::kVerb}));
  EXPECT_EQ(words[1], (ContentWord{3, "exhausting", PosTag::kAdj}));
  EXPECT_EQ(baseline_tag(toks)[2], PosTag::kAdv);
}

TEST(ContentWords, PunctuationOnlyAndProperNoun) {
  EXPECT_TRUE(extract_content_words(tokenize("!!!"), BaselineTagger{}, Stoplist::defaults()).empty());
  const auto paris = extract_content_words(tokenize("Paris"), BaselineTagger{}, Stoplist::defaults());
  ASSERT_EQ(paris.size(), 1u);
  EXPECT_EQ(paris[0], (ContentWord{0, "paris", PosTag::kPropn}));
}

TEST(ContentWords, SubsetOfWordTokensAndIdempotent) {
  const auto toks = tokenize("Hi there, the back-to-back meetings in Tokyo were exhausting; I'm tired.");
  const BaselineTagger tagger;
  const auto a = extract_content_words(toks, tagger, Stoplist::defaults());
  const auto b = extract_content_words(toks, tagger, Stoplist::defaults());
  EXPECT_EQ(a, b);
  for (const auto& w : a) {
    EXPECT_EQ(toks[w.token_index].kind, TokenKind::kWord);
    EXPECT_TRUE(is_content_tag(w.pos));
    EXPECT_FALSE(Stoplist::defaults().contains(w.lemma));
  }
}

TEST(ContentWords, MisalignedTagsAreRejected) {
  const auto toks = tokenize("two words");
  const std::vector<PosTag> one{PosTag::kNoun};
  try {
    extract_content_words(toks, one, Stoplist::defaults());
    FAIL() << "expected TaggerMisalignment";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTaggerMisalignment);
  }
}

TEST(Stoplist, DefaultsAndFile) {
  const auto d = Stoplist::defaults();
  EXPECT_GE(d.size(), 100u);
  EXPECT_LE(d.size(), 200u);
  EXPECT_TRUE(d.contains("really"));
  EXPECT_TRUE(d.contains("very"));
  EXPECT_FALSE(d.contains("exhausting"));

  testing::TempDir dir;
  testing::spit(dir / "stop.txt", "# comment\nExhausting\n\nsounds\n");
  const auto custom = Stoplist::from_file(dir / "stop.txt");
  EXPECT_TRUE(custom.contains("exhausting"));
  const auto words = extract_content_words(tokenize("that sounds really exhausting"), BaselineTagger{}, custom);
  ASSERT_EQ(words.size(), 1u);
  EXPECT_EQ(words[0].lemma, "really");
}

TEST(ExternalTagger, LineProtocolRoundTrip) {
  const ExternalProcessTagger tagger(
      R"(while IFS= read -r t; do case "$t" in "") echo ;; [A-Z]*) echo PROPN ;; *) echo verb ;; esac; done)");
  const auto toks = tokenize("Alice sings");
  EXPECT_EQ(tagger.tag(toks), (std::vector<PosTag>{PosTag::kPropn, PosTag::kVerb}));
  // The subprocess is reused across calls.
  EXPECT_EQ(tagger.tag(tokenize("runs")), (std::vector<PosTag>{PosTag::kVerb}));
}

TEST(ExternalTagger, UnknownLabelsBecomeX) {
  const ExternalProcessTagger tagger(
      R"(while IFS= read -r t; do if [ -z "$t" ]; then echo; else echo BANANA; fi; done)");
  EXPECT_EQ(tagger.tag(tokenize("hi")), (std::vector<PosTag>{PosTag::kX}));
}

TEST(ExternalTagger, ShortReplyIsMisalignment) {
  const ExternalProcessTagger tagger(
      R"(while IFS= read -r t; do if [ -z "$t" ]; then echo; fi; done)");
  try {
    tagger.tag(tokenize("one two"));
    FAIL() << "expected TaggerMisalignment";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTaggerMisalignment);
  }
}

}  // namespace
}  // namespace lexiswitch
