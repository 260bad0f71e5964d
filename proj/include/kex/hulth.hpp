#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "kex/errors.hpp"
#include "kex/format.hpp"
#include "kex/textproc.hpp"

namespace kex {
namespace detail {

inline std::string normalize_ws(std::string_view text) {
  std::string out;
  bool in_space = true;  // swallow leading whitespace
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
    } else {
      if (in_space && !out.empty()) out.push_back(' ');
      in_space = false;
      out.push_back(c);
    }
  }
  return out;
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

// Title lines run flush-left from the top of the file; the abstract
// starts at the first blank or indented line. Files without such a
// boundary are treated as one title line plus body.
inline std::pair<std::string, std::string> split_title_body(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  std::size_t boundary = lines.size();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line.front() == ' ' || line.front() == '\t') {
      boundary = i;
      break;
    }
  }
  if (boundary == lines.size() && lines.size() > 1) boundary = 1;
  std::string title;
  for (std::size_t i = 0; i < boundary; ++i) title += lines[i] + " ";
  std::string body;
  for (std::size_t i = boundary; i < lines.size(); ++i) body += lines[i] + " ";
  return {normalize_ws(title), normalize_ws(body)};
}

inline std::vector<std::string> parse_gold_phrases(const std::string& text) {
  std::vector<std::string> out;
  std::string normalized = normalize_ws(text);
  std::size_t start = 0;
  while (start <= normalized.size()) {
    std::size_t semi = normalized.find(';', start);
    std::string_view phrase = semi == std::string::npos
                                  ? std::string_view(normalized).substr(start)
                                  : std::string_view(normalized).substr(start, semi - start);
    phrase = trim(phrase);
    if (!phrase.empty()) out.emplace_back(phrase);
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace detail

// Reads a directory of <name>.abstr files (title then abstract) with
// optional <name>.uncontr mates carrying semicolon-separated gold
// keyphrases. Files sort by name; body text is whitespace-normalized.
inline std::vector<Document> ingest_hulth(const std::filesystem::path& dir,
                                          std::vector<std::string>* warnings = nullptr) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IngestError("not a directory: " + dir.string());
  std::vector<fs::path> abstr_files;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".abstr")
      abstr_files.push_back(entry.path());
  }
  std::sort(abstr_files.begin(), abstr_files.end());
  std::vector<Document> docs;
  for (const fs::path& path : abstr_files) {
    auto [title, body] = detail::split_title_body(read_text_file(path));
    if (body.empty()) {
      if (warnings)
        warnings->push_back("skipping " + path.filename().string() + ": no abstract text");
      continue;
    }
    Document doc;
    doc.id = path.stem().string();
    doc.title = title;
    doc.body = body;
    fs::path mate = path;
    mate.replace_extension(".uncontr");
    if (fs::exists(mate)) {
      doc.gold_keywords = detail::parse_gold_phrases(read_text_file(mate));
    } else if (warnings) {
      warnings->push_back("no gold keywords for " + path.filename().string());
    }
    docs.push_back(std::move(doc));
  }
  if (docs.empty())
    throw IngestError("no usable .abstr files found under " + dir.string());
  return docs;
}

}  // namespace kex
