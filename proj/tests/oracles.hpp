#pragma once
// Independent reference implementations used by the tests. They share no code
// with the library: free-group words are plain strings where an upper-case
// letter is the inverse of its lower-case letter.

#include <cctype>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline char inv(char c) { return std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c)) : static_cast<char>(std::toupper(c)); }

// Naive scan-and-cancel: repeatedly delete adjacent inverse pairs.
inline std::string reduce(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i + 1] == inv(w[i])) {
        w.erase(i, 2);
        changed = true;
        break;
      }
  }
  return w;
}

inline std::string inverse(const std::string& w) {
  std::string r(w.rbegin(), w.rend());
  for (auto& c : r) c = inv(c);
  return r;
}

inline std::string mul(const std::string& u, const std::string& v) { return reduce(u + v); }

inline std::string common_prefix(const std::string& u, const std::string& v) {
  size_t i = 0;
  while (i < u.size() && i < v.size() && u[i] == v[i]) ++i;
  return u.substr(0, i);
}

// All reduced words of length <= n over the given lower-case letters.
inline std::vector<std::string> all_reduced(const std::string& letters, int n) {
  std::string syms = letters;
  for (char c : letters) syms += inv(c);
  std::vector<std::string> out{""};
  std::vector<std::string> layer{""};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : syms)
        if (w.empty() || w.back() != inv(c)) next.push_back(w + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::string random_reduced(std::mt19937_64& rng, const std::string& letters, int max_len) {
  std::string syms = letters;
  for (char c : letters) syms += inv(c);
  int n = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::string w;
  while (static_cast<int>(w.size()) < n) {
    char c = syms[std::uniform_int_distribution<size_t>(0, syms.size() - 1)(rng)];
    if (w.empty() || w.back() != inv(c)) w += c;
  }
  return w;
}

// "aB" -> "a*b^-1" in the library's grammar.
inline std::string to_expr(const std::string& w) {
  if (w.empty()) return "1";
  std::string s;
  for (char c : w) {
    if (!s.empty()) s += "*";
    if (std::isupper(static_cast<unsigned char>(c)))
      s += std::string(1, static_cast<char>(std::tolower(c))) + "^-1";
    else
      s += c;
  }
  return s;
}

// Britton-style oracle for T1 = <a,b,z | z^-1 a z = b> working on raw symbol
// strings ('z','Z' stable). Reduces freely and removes pinches z^-1 a^k z ->
// b^k and z b^k z^-1 -> a^k until stable; returns the number of surviving z's.
inline int t1_stable_count(std::string w) {
  for (;;) {
    w = reduce(w);
    bool changed = false;
    for (size_t i = 0; i < w.size() && !changed; ++i) {
      if (w[i] != 'Z' && w[i] != 'z') continue;
      size_t j = i + 1;
      while (j < w.size() && w[j] != 'z' && w[j] != 'Z') ++j;
      if (j == w.size() || w[j] != inv(w[i])) continue;
      std::string mid = w.substr(i + 1, j - i - 1);
      char keep = w[i] == 'Z' ? 'a' : 'b';
      char put = w[i] == 'Z' ? 'b' : 'a';
      bool ok = true;
      for (char c : mid) ok = ok && std::tolower(c) == keep;
      if (!ok) continue;
      std::string rep;
      for (char c : mid) rep += std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(put)) : put;
      w = w.substr(0, i) + rep + w.substr(j + 1);
      changed = true;
    }
    if (!changed) break;
  }
  int n = 0;
  for (char c : w) n += (c == 'z' || c == 'Z');
  return n;
}

}  // namespace oracle
