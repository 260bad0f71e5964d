#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kex/errors.hpp"
#include "kex/format.hpp"
#include "kex/porter.hpp"
#include "kex/pos.hpp"
#include "kex/stopwords.hpp"

namespace kex {

// One sentence of externally supplied (surface, tag) pairs.
using TaggedSentence = std::vector<std::pair<std::string, PosTag>>;

struct Document {
  std::string id;
  std::string title;
  std::string body;
  std::vector<std::string> gold_keywords;
  std::optional<std::vector<TaggedSentence>> pre_tagged;
};

enum class TaggerMode { Builtin, PreTagged };

struct CandidateToken {
  std::string stem;
  std::string surface;
  int sentence_index = 0;
  int token_position = 0;  // 1-based over all body tokens
};

struct CandidateSequence {
  std::string doc_id;
  std::vector<CandidateToken> tokens;
  int sentence_count = 0;
};

namespace detail {

inline const std::set<std::string, std::less<>>& abbreviation_set() {
  // lowercase, without the trailing period
  static const std::set<std::string, std::less<>> abbr = {
      "e.g", "i.e", "etc", "vs", "cf", "al", "fig", "figs", "eq", "eqs",
      "no", "nos", "vol", "vols", "st", "dr", "mr", "mrs", "ms", "prof",
      "dept", "univ", "inc", "ltd", "co", "corp", "ca", "resp", "approx",
      "sec", "secs", "ref", "refs", "ch", "pp", "ed", "eds", "jr", "sr",
  };
  return abbr;
}

// Token ending right before position i (exclusive), made of letters and
// interior periods, lowercased: "e.g." before i gives "e.g".
inline bool abbreviation_before(std::string_view text, std::size_t i) {
  std::size_t end = i;
  std::size_t start = end;
  while (start > 0) {
    char c = text[start - 1];
    if (std::isalpha(static_cast<unsigned char>(c)) || (c == '.' && start - 1 > 0)) {
      --start;
    } else {
      break;
    }
  }
  while (start < end && text[start] == '.') ++start;
  if (start == end) return false;
  return abbreviation_set().count(to_lower(text.substr(start, end - start))) > 0;
}

}  // namespace detail

// Splits on sentence terminators ('.', '!', '?') followed by whitespace and
// an uppercase letter or digit. A period directly after a known
// abbreviation does not split. Sentences keep their terminators; every
// non-whitespace byte of the input lands in exactly one sentence.
inline std::vector<std::string> split_sentences(std::string_view body) {
  if (trim(body).empty()) throw EmptyDocumentError("document body is empty");
  std::vector<std::string> out;
  std::size_t n = body.size();
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    char c = body[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    std::size_t run_end = i + 1;
    while (run_end < n && (body[run_end] == '.' || body[run_end] == '!' || body[run_end] == '?')) ++run_end;
    std::size_t close = run_end;
    while (close < n && (body[close] == '"' || body[close] == '\'' || body[close] == ')' || body[close] == ']')) ++close;
    std::size_t ws = close;
    while (ws < n && std::isspace(static_cast<unsigned char>(body[ws]))) ++ws;
    bool boundary = ws > close && ws < n &&
                    (std::isupper(static_cast<unsigned char>(body[ws])) ||
                     std::isdigit(static_cast<unsigned char>(body[ws])));
    if (boundary && c == '.' && run_end == i + 1 && detail::abbreviation_before(body, i)) {
      boundary = false;
    }
    if (boundary) {
      std::string_view sent = trim(body.substr(start, close - start));
      if (!sent.empty()) out.emplace_back(sent);
      start = ws;
      i = ws;
    } else {
      i = close;
    }
  }
  std::string_view tail = trim(body.substr(start));
  if (!tail.empty()) out.emplace_back(tail);
  if (out.empty()) throw EmptyDocumentError("document body has no sentences");
  return out;
}

// Maximal runs of [A-Za-z0-9-]; hyphens are dropped so hyphenated
// compounds come out joined. Runs with no remaining characters vanish.
inline std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  std::string cur;
  bool in_run = false;
  for (char c : sentence) {
    bool alnum = std::isalnum(static_cast<unsigned char>(c)) != 0;
    if (alnum || c == '-') {
      in_run = true;
      if (alnum) cur.push_back(c);
    } else if (in_run) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      in_run = false;
    }
  }
  if (in_run && !cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline TaggedSentence tokenize_and_tag(std::string_view sentence, const Tagger& tagger) {
  TaggedSentence out;
  for (std::string& tok : tokenize(sentence)) {
    PosTag t = tagger.tag(to_lower(tok));
    out.emplace_back(std::move(tok), t);
  }
  return out;
}

namespace detail {

inline bool has_alpha(std::string_view s) {
  for (char c : s)
    if (std::isalpha(static_cast<unsigned char>(c))) return true;
  return false;
}

inline std::vector<TaggedSentence> tag_document(const Document& doc, const Tagger& tagger,
                                                TaggerMode mode) {
  if (mode == TaggerMode::PreTagged) {
    if (!doc.pre_tagged)
      throw DataError("document '" + doc.id + "' has no pre-tagged tokens");
    // strip hyphens from supplied surfaces so both paths normalize alike
    std::vector<TaggedSentence> out;
    out.reserve(doc.pre_tagged->size());
    for (const TaggedSentence& sent : *doc.pre_tagged) {
      TaggedSentence cleaned;
      cleaned.reserve(sent.size());
      for (const auto& [surface, tag] : sent) {
        std::string s;
        for (char c : surface)
          if (c != '-') s.push_back(c);
        if (!s.empty()) cleaned.emplace_back(std::move(s), tag);
      }
      out.push_back(std::move(cleaned));
    }
    if (out.empty()) throw EmptyDocumentError("document '" + doc.id + "' has no sentences");
    return out;
  }
  std::vector<TaggedSentence> out;
  for (const std::string& sent : split_sentences(doc.body)) {
    out.push_back(tokenize_and_tag(sent, tagger));
  }
  return out;
}

}  // namespace detail

// Candidate stems: nouns and adjectives, lowercased, at least two
// characters, containing a letter, not stopwords, Porter-stemmed.
// token_position counts every token of the body, kept or not.
inline CandidateSequence select_candidates(const Document& doc, const Tagger& tagger,
                                           const Stopwords& stopwords,
                                           TaggerMode mode = TaggerMode::Builtin) {
  std::vector<TaggedSentence> tagged = detail::tag_document(doc, tagger, mode);
  CandidateSequence seq;
  seq.doc_id = doc.id;
  seq.sentence_count = static_cast<int>(tagged.size());
  int position = 0;
  for (std::size_t si = 0; si < tagged.size(); ++si) {
    for (const auto& [surface, tag] : tagged[si]) {
      ++position;
      if (tag == PosTag::Other) continue;
      std::string lower = to_lower(surface);
      if (lower.size() < 2) continue;
      if (!detail::has_alpha(lower)) continue;
      if (stopwords.contains(lower)) continue;
      seq.tokens.push_back(
          {porter_stem(lower), surface, static_cast<int>(si), position});
    }
  }
  if (seq.tokens.empty())
    throw EmptyCandidatesError("document '" + doc.id + "' has no candidate keywords");
  return seq;
}

}  // namespace kex
