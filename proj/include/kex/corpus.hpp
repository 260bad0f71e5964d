#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kex/dataset.hpp"
#include "kex/errors.hpp"
#include "kex/format.hpp"
#include "kex/porter.hpp"
#include "kex/stopwords.hpp"
#include "kex/textproc.hpp"

namespace kex {

// One JSON object per line: {"id", "title", "abstract", "gold_keywords",
// optional "pre_tagged_tokens" as sentences of [surface, tag] pairs}.
inline std::vector<Document> load_corpus_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus: " + path.string());
  std::vector<Document> docs;
  std::set<std::string> seen;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": invalid JSON: " +
                      e.what());
    }
    auto fail = [&](const std::string& msg) -> DataError {
      return DataError(path.string() + ":" + std::to_string(line_no) + ": " + msg);
    };
    if (!j.is_object()) throw fail("expected a JSON object");
    if (!j.contains("id") || !j["id"].is_string()) throw fail("missing string field 'id'");
    if (!j.contains("abstract") || !j["abstract"].is_string())
      throw fail("missing string field 'abstract'");
    Document doc;
    doc.id = j["id"].get<std::string>();
    if (doc.id.empty()) throw fail("'id' must be non-empty");
    if (!seen.insert(doc.id).second) throw fail("duplicate document id '" + doc.id + "'");
    doc.body = j["abstract"].get<std::string>();
    if (trim(doc.body).empty()) throw fail("'abstract' must be non-empty");
    if (j.contains("title")) {
      if (!j["title"].is_string()) throw fail("'title' must be a string");
      doc.title = j["title"].get<std::string>();
    }
    if (j.contains("gold_keywords")) {
      if (!j["gold_keywords"].is_array()) throw fail("'gold_keywords' must be an array");
      for (const auto& g : j["gold_keywords"]) {
        if (!g.is_string()) throw fail("'gold_keywords' entries must be strings");
        doc.gold_keywords.push_back(g.get<std::string>());
      }
    }
    if (j.contains("pre_tagged_tokens")) {
      const auto& pt = j["pre_tagged_tokens"];
      if (!pt.is_array()) throw fail("'pre_tagged_tokens' must be an array of sentences");
      std::vector<TaggedSentence> sentences;
      for (const auto& sent : pt) {
        if (!sent.is_array()) throw fail("each pre-tagged sentence must be an array");
        TaggedSentence ts;
        for (const auto& tok : sent) {
          if (!tok.is_array() || tok.size() != 2 || !tok[0].is_string() || !tok[1].is_string())
            throw fail("each pre-tagged token must be a [surface, tag] pair");
          try {
            ts.emplace_back(tok[0].get<std::string>(), parse_pos_tag(tok[1].get<std::string>()));
          } catch (const DataError& e) {
            throw fail(e.what());
          }
        }
        sentences.push_back(std::move(ts));
      }
      doc.pre_tagged = std::move(sentences);
    }
    docs.push_back(std::move(doc));
  }
  if (docs.empty()) throw DataError("corpus " + path.string() + " has no documents");
  return docs;
}

inline std::string corpus_to_jsonl(const std::vector<Document>& docs) {
  std::string out;
  for (const Document& doc : docs) {
    nlohmann::json j;
    j["id"] = doc.id;
    j["title"] = doc.title;
    j["abstract"] = doc.body;
    j["gold_keywords"] = doc.gold_keywords;
    if (doc.pre_tagged) {
      nlohmann::json sentences = nlohmann::json::array();
      for (const TaggedSentence& sent : *doc.pre_tagged) {
        nlohmann::json ts = nlohmann::json::array();
        for (const auto& [surface, tag] : sent)
          ts.push_back({surface, std::string(pos_tag_name(tag))});
        sentences.push_back(std::move(ts));
      }
      j["pre_tagged_tokens"] = std::move(sentences);
    }
    out += j.dump() + "\n";
  }
  return out;
}

inline void save_corpus_jsonl(const std::vector<Document>& docs,
                              const std::filesystem::path& path) {
  atomic_write_file(path, corpus_to_jsonl(docs));
}

// Drops documents with fewer sentences or fewer gold unigram stems than
// requested. Zero thresholds keep everything.
inline std::vector<Document> filter_corpus(const std::vector<Document>& docs, int min_sentences,
                                           int min_gold, const Stopwords& stopwords,
                                           std::vector<std::string>* warnings = nullptr) {
  if (min_sentences < 0 || min_gold < 0) throw InputError("filter thresholds must be >= 0");
  std::vector<Document> out;
  for (const Document& doc : docs) {
    if (min_sentences > 0) {
      long sentences = 0;
      try {
        sentences = static_cast<long>(split_sentences(doc.body).size());
      } catch (const EmptyDocumentError&) {
        sentences = 0;
      }
      if (sentences < min_sentences) {
        if (warnings)
          warnings->push_back("filtered document '" + doc.id + "': only " +
                              std::to_string(sentences) + " sentences");
        continue;
      }
    }
    if (min_gold > 0) {
      long gold = static_cast<long>(gold_unigram_stems(doc.gold_keywords, stopwords).size());
      if (gold < min_gold) {
        if (warnings)
          warnings->push_back("filtered document '" + doc.id + "': only " +
                              std::to_string(gold) + " gold stems");
        continue;
      }
    }
    out.push_back(doc);
  }
  return out;
}

struct CorpusStats {
  long documents = 0;
  double avg_length = 0.0;        // mean body token count
  double avg_gold = 0.0;          // mean distinct gold unigram stems
  double keyword_presence = 0.0;  // mean % of gold stems found in the body
};

inline CorpusStats corpus_stats(const std::vector<Document>& docs, const Stopwords& stopwords) {
  if (docs.empty()) throw DataError("cannot compute statistics of an empty corpus");
  CorpusStats st;
  st.documents = static_cast<long>(docs.size());
  double presence_sum = 0.0;
  long presence_docs = 0;
  for (const Document& doc : docs) {
    std::vector<std::string> tokens = tokenize(doc.body);
    st.avg_length += static_cast<double>(tokens.size());
    std::set<std::string> gold = gold_unigram_stems(doc.gold_keywords, stopwords);
    st.avg_gold += static_cast<double>(gold.size());
    if (!gold.empty()) {
      std::set<std::string> body_stems;
      for (const std::string& tok : tokens) body_stems.insert(porter_stem(to_lower(tok)));
      long hit = 0;
      for (const std::string& g : gold)
        if (body_stems.count(g)) ++hit;
      presence_sum += 100.0 * static_cast<double>(hit) / static_cast<double>(gold.size());
      ++presence_docs;
    }
  }
  st.avg_length /= static_cast<double>(docs.size());
  st.avg_gold /= static_cast<double>(docs.size());
  st.keyword_presence = presence_docs > 0 ? presence_sum / static_cast<double>(presence_docs) : 0.0;
  return st;
}

inline std::string render_stats(const CorpusStats& st) {
  std::string out;
  out += "documents\t" + std::to_string(st.documents) + "\n";
  out += "avg_length\t" + fmt_double(st.avg_length) + "\n";
  out += "avg_gold\t" + fmt_double(st.avg_gold) + "\n";
  out += "keyword_presence\t" + fmt_double(st.keyword_presence) + "\n";
  return out;
}

}  // namespace kex
