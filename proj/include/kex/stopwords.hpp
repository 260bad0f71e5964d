#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "kex/errors.hpp"
#include "kex/format.hpp"

namespace kex {

namespace detail {

// English function words, Snowball-style, plus a handful of connectives
// common in technical prose. Lowercase, one entry per token.
inline const std::set<std::string, std::less<>>& default_stopword_set() {
  static const std::set<std::string, std::less<>> words = {
      "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you",
      "your", "yours", "yourself", "yourselves", "he", "him", "his",
      "himself", "she", "her", "hers", "herself", "it", "its", "itself",
      "they", "them", "their", "theirs", "themselves", "what", "which",
      "who", "whom", "this", "that", "these", "those", "am", "is", "are",
      "was", "were", "be", "been", "being", "have", "has", "had", "having",
      "do", "does", "did", "doing", "a", "an", "the", "and", "but", "if",
      "or", "because", "as", "until", "while", "of", "at", "by", "for",
      "with", "about", "against", "between", "into", "through", "during",
      "before", "after", "above", "below", "to", "from", "up", "down",
      "in", "out", "on", "off", "over", "under", "again", "further",
      "then", "once", "here", "there", "when", "where", "why", "how",
      "all", "any", "both", "each", "few", "more", "most", "other",
      "some", "such", "no", "nor", "not", "only", "own", "same", "so",
      "than", "too", "very", "s", "t", "can", "will", "just", "don",
      "should", "now",
      "also", "although", "among", "amongst", "anyway", "became",
      "become", "becomes", "cannot", "could", "either", "else", "ever",
      "every", "however", "may", "might", "must", "neither", "often",
      "otherwise", "per", "rather", "shall", "since", "still",
      "therefore", "thus", "upon", "via", "whether", "within", "without",
      "would", "yet", "etc", "eg", "ie", "et", "al",
  };
  return words;
}

}  // namespace detail

// Lowercase lookup table of words excluded from candidate and title stems.
class Stopwords {
 public:
  Stopwords() : words_(detail::default_stopword_set()) {}

  // One word per line; '#' starts a comment line. Replaces the default list.
  static Stopwords from_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw DataError("cannot open stopword file: " + p.string());
    Stopwords sw;
    sw.words_.clear();
    std::string line;
    while (std::getline(in, line)) {
      std::string_view t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      sw.words_.insert(to_lower(t));
    }
    if (sw.words_.empty()) throw DataError("stopword file has no entries: " + p.string());
    return sw;
  }

  bool contains(std::string_view lower_word) const { return words_.count(lower_word) > 0; }

  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

}  // namespace kex
