#include "znfree/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace znfree {

Word concat_reduce(const Word& u, const Word& v) {
  size_t i = 0;
  while (i < u.size() && i < v.size() && u[u.size() - 1 - i] == -v[i]) ++i;
  Word r;
  r.reserve(u.size() + v.size() - 2 * i);
  r.insert(r.end(), u.begin(), u.end() - static_cast<long>(i));
  r.insert(r.end(), v.begin() + static_cast<long>(i), v.end());
  return r;
}

Word free_reduce(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (Letter x : w) {
    if (x == 0) throw std::invalid_argument("zero letter");
    if (!r.empty() && r.back() == -x)
      r.pop_back();
    else
      r.push_back(x);
  }
  return r;
}

Word invert_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& x : r) x = -x;
  return r;
}

Word word_power(const Word& w, int64_t k) {
  if (k < 0) return word_power(invert_word(w), -k);
  Word acc;
  Word base = w;
  while (k > 0) {
    if (k & 1) acc = concat_reduce(acc, base);
    k >>= 1;
    if (k) base = concat_reduce(base, base);
  }
  return acc;
}

bool is_freely_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1] || w[i] == 0) return false;
  return std::find(w.begin(), w.end(), 0) == w.end();
}

bool is_cyclically_reduced_word(const Word& w) {
  return is_freely_reduced(w) && (w.size() < 2 || w.front() != -w.back());
}

size_t common_prefix_length(const Word& u, const Word& v) {
  size_t i = 0;
  while (i < u.size() && i < v.size() && u[i] == v[i]) ++i;
  return i;
}

void cyclic_split(const Word& w, Word& conj, Word& core) {
  size_t i = 0;
  while (2 * i + 1 < w.size() && w[i] == -w[w.size() - 1 - i]) ++i;
  conj.assign(w.end() - static_cast<long>(i), w.end());
  core.assign(w.begin() + static_cast<long>(i), w.end() - static_cast<long>(i));
}

Word primitive_root(const Word& w, int64_t* exponent) {
  size_t n = w.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) {
      if (exponent) *exponent = static_cast<int64_t>(n / d);
      return Word(w.begin(), w.begin() + static_cast<long>(d));
    }
  }
  if (exponent) *exponent = n ? 1 : 0;
  return w;
}

bool is_rotation(const Word& u, const Word& v, size_t* shift) {
  if (u.size() != v.size()) return false;
  if (u.empty()) {
    if (shift) *shift = 0;
    return true;
  }
  Word vv = v;
  vv.insert(vv.end(), v.begin(), v.end());
  auto it = std::search(vv.begin(), vv.end(), u.begin(), u.end());
  if (it == vv.end()) return false;
  if (shift) *shift = static_cast<size_t>(it - vv.begin());
  return true;
}

bool words_conjugate(const Word& u, const Word& v, Word* conjugator) {
  Word cu, ku, cv, kv;
  cyclic_split(u, cu, ku);
  cyclic_split(v, cv, kv);
  size_t s = 0;
  if (!is_rotation(kv, ku, &s)) return false;
  if (conjugator) {
    // ku = p q, kv = q p with |p| = s, so kv = p^-1 ku p.
    Word p(ku.begin(), ku.begin() + static_cast<long>(s));
    // u = cu^-1 ku cu, v = cv^-1 kv cv = cv^-1 p^-1 cu u cu^-1 p cv
    *conjugator = concat_reduce(concat_reduce(invert_word(cu), p), cv);
  }
  return true;
}

std::string render_word(const Word& w, const std::vector<std::string>& alphabet) {
  if (w.empty()) return "1";
  std::string s;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int64_t run = static_cast<int64_t>(j - i);
    if (!s.empty()) s += "*";
    s += alphabet.at(static_cast<size_t>(std::abs(w[i]) - 1));
    int64_t e = w[i] > 0 ? run : -run;
    if (e != 1) s += "^" + std::to_string(e);
    i = j;
  }
  return s;
}

}  // namespace znfree
