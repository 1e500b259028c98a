#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quiver/core.hpp"

namespace quiv {

// Text format:
//   vertices N
//   arrow S T      (1-based, repeated for parallel arrows, S == T for a loop)
// Lines starting with '#' are comments; blank lines are ignored.
inline Quiver parse_quiver(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1;
  std::vector<std::pair<int, int>> arrows;
  auto fail = [&](const std::string &msg) {
    throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": " + msg);
  };
  auto read_int = [&](std::istringstream &ls, const char *what) {
    std::string tok;
    if (!(ls >> tok))
      fail(std::string("missing ") + what);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (...) {
      fail(std::string("bad integer for ") + what + ": '" + tok + "'");
    }
    if (used != tok.size() || v < INT32_MIN || v > INT32_MAX)
      fail(std::string("bad integer for ") + what + ": '" + tok + "'");
    return static_cast<int>(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#')
      continue;
    if (key == "vertices") {
      if (n >= 0)
        fail("duplicate 'vertices' line");
      n = read_int(ls, "vertex count");
      if (n < 1)
        fail("vertex count must be at least 1");
    } else if (key == "arrow") {
      if (n < 0)
        fail("'arrow' before 'vertices'");
      int s = read_int(ls, "arrow source");
      int t = read_int(ls, "arrow target");
      if (s < 1 || s > n || t < 1 || t > n)
        fail("arrow endpoint outside [1, " + std::to_string(n) + "]");
      arrows.emplace_back(s, t);
    } else {
      fail("unknown keyword '" + key + "'");
    }
    std::string extra;
    if (ls >> extra)
      fail("unexpected trailing token '" + extra + "'");
  }
  if (n < 0)
    throw Error(Errc::Parse, "missing 'vertices' line");
  return build_quiver(n, arrows);
}

inline std::string serialize_quiver(const Quiver &q) {
  std::string out = "vertices " + std::to_string(q.vertex_count()) + "\n";
  for (const auto &a : q.arrows())
    out += "arrow " + std::to_string(a.source + 1) + " " + std::to_string(a.target + 1) + "\n";
  return out;
}

inline Quiver load_quiver(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw Error(Errc::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_quiver(ss.str());
}

// Comma-separated integers, e.g. "3,1,1".
inline Vec parse_vector(const std::string &text) {
  Vec v;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t"), b = tok.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw Error(Errc::Parse, "empty entry in vector '" + text + "'");
    tok = tok.substr(a, b - a + 1);
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (...) {
      throw Error(Errc::Parse, "bad vector entry '" + tok + "'");
    }
    if (used != tok.size())
      throw Error(Errc::Parse, "bad vector entry '" + tok + "'");
    v.push_back(x);
  }
  if (v.empty())
    throw Error(Errc::Parse, "empty vector");
  return v;
}

} // namespace quiv
