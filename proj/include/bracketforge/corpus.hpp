#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bracketforge/diagram.hpp"

namespace bracketforge {

// One diagram from a corpus file. Lines look like
//
//   #: det=3 family=rational spec=3
//   3_1 : X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)
//
// `#:` comment lines hold whitespace-separated key=value attributes that
// attach to the next diagram line; other `#` lines are free-form comments.
struct CorpusEntry {
  std::string name;
  std::map<std::string, std::string> attrs;
  Diagram diagram = Diagram::unknot();

  bool has_attr(const std::string& key) const { return attrs.count(key) > 0; }
  std::string attr(const std::string& key, std::string fallback = "") const {
    auto it = attrs.find(key);
    return it == attrs.end() ? fallback : it->second;
  }
  int attr_int(const std::string& key, int fallback = 0) const {
    auto it = attrs.find(key);
    return it == attrs.end() ? fallback : std::stoi(it->second);
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

inline std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::map<std::string, std::string> pending;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (t.size() >= 2 && t[1] == ':') {
        std::istringstream is(t.substr(2));
        std::string tok;
        while (is >> tok) {
          std::size_t eq = tok.find('=');
          if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("corpus line " + std::to_string(lineno) +
                                        ": attribute token '" + tok +
                                        "' is not key=value");
          pending[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
      }
      continue;
    }
    std::size_t colon = t.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("corpus line " + std::to_string(lineno) +
                                  ": expected '<name> : X(...)'");
    CorpusEntry e;
    e.name = detail::trim(t.substr(0, colon));
    if (e.name.empty())
      throw std::invalid_argument("corpus line " + std::to_string(lineno) +
                                  ": empty diagram name");
    e.attrs = std::move(pending);
    pending.clear();
    try {
      e.diagram = parse_pd(t.substr(colon + 1));
    } catch (const std::exception& ex) {
      throw std::invalid_argument("corpus line " + std::to_string(lineno) +
                                  " (" + e.name + "): " + ex.what());
    }
    out.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i].name == out[j].name)
        throw std::invalid_argument("corpus: duplicate diagram name '" +
                                    out[i].name + "'");
  return out;
}

inline std::vector<CorpusEntry> parse_corpus(const std::string& text) {
  std::istringstream is(text);
  return parse_corpus(is);
}

inline std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return parse_corpus(in);
}

inline std::string emit_entry(const CorpusEntry& e) {
  std::string out;
  if (!e.attrs.empty()) {
    out += "#:";
    for (const auto& [k, v] : e.attrs) out += " " + k + "=" + v;
    out += "\n";
  }
  out += e.name + " : " + e.diagram.to_pd_text() + "\n";
  return out;
}

inline std::string emit_corpus(const std::vector<CorpusEntry>& entries,
                               const std::string& header = "") {
  std::string out;
  if (!header.empty()) {
    std::istringstream is(header);
    std::string line;
    while (std::getline(is, line)) out += "# " + line + "\n";
  }
  for (const auto& e : entries) out += emit_entry(e);
  return out;
}

}  // namespace bracketforge
