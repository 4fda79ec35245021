#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "znfree/tower.hpp"

namespace znfree {

namespace {

constexpr int64_t kSearchRadius = 4;
constexpr size_t kOrbitLimit = 256;

// Calls visit(a, exps) on products of gens with exponents in [-R, R],
// in order of increasing max-norm. Stops when visit returns true.
bool for_each_in_box(const GroupTower& t, const std::vector<Element>& gens, int64_t R,
                     const std::function<bool(const Element&, const std::vector<int64_t>&)>& visit) {
  std::vector<int64_t> e(gens.size(), 0);
  for (int64_t r = 0; r <= R; ++r) {
    std::function<bool(size_t, bool)> rec = [&](size_t i, bool hit) -> bool {
      if (i == gens.size()) {
        if (!hit && r > 0) return false;
        return visit(abelian_product(t, gens, e), e);
      }
      for (int64_t v = -r; v <= r; ++v) {
        e[i] = v;
        if (rec(i + 1, hit || std::llabs(v) == r)) return true;
      }
      e[i] = 0;
      return false;
    };
    if (rec(0, false)) return true;
  }
  return false;
}

// Conjugacy of cyclically reduced elements using only letters of their own
// level: rotations of the block sequence, then a search in the associated
// subgroup of the leading block.
std::optional<Element> conjugate_in_level(const GroupTower& t, const Element& g, const Element& h) {
  if (g.height() != h.height()) return std::nullopt;
  if (g.is_identity()) return identity();
  if (g.level == 1) {
    Word x;
    if (!words_conjugate(g.word, h.word, &x)) return std::nullopt;
    return Element::from_word(x);
  }
  const size_t nb = g.blocks.size();
  if (h.blocks.size() != nb) return std::nullopt;
  const Element& p0 = h.pieces[0];
  Element h0 = conjugate_by(t, h, invert(t, p0));
  Element w;
  for (size_t i = 0; i < nb; ++i) {
    // w = pieces[0] * block[0] * ... * pieces[i]
    w = multiply(t, w, g.pieces[i]);
    Element gi = conjugate_by(t, g, w);
    if (gi.blocks == h0.blocks) {
      const Block& b = gi.blocks[0];
      const auto& gens = b.sign > 0 ? t.letter(b.letter).source : t.letter(b.letter).target;
      std::optional<Element> found;
      for_each_in_box(t, gens, kSearchRadius, [&](const Element& a, const std::vector<int64_t>&) {
        if (conjugate_by(t, gi, a) == h0) {
          found = multiply(t, multiply(t, w, a), invert(t, p0));
          return true;
        }
        return false;
      });
      if (found) return found;
    }
    w = multiply(t, w, stable_generator(t, g.blocks[i].letter, g.blocks[i].sign));
  }
  return std::nullopt;
}

}  // namespace

std::optional<Element> find_conjugator(const GroupTower& t, const Element& g, const Element& h) {
  CyclicSplit sg = cyclic_decompose(t, g);
  CyclicSplit sh = cyclic_decompose(t, h);
  if (sg.core.height() != sh.core.height()) return std::nullopt;
  // Orbit of the core under conjugation by higher stable letters whose
  // associated subgroups contain a conjugate of it. Each node carries x with
  // x^-1 core x = node.
  std::map<Element, Element> seen;
  std::deque<Element> queue;
  seen.emplace(sg.core, identity());
  queue.push_back(sg.core);
  const int L = sg.core.height();
  while (!queue.empty()) {
    Element node = queue.front();
    queue.pop_front();
    const Element x = seen.at(node);
    if (auto y = conjugate_in_level(t, node, sh.core)) {
      Element c = multiply(t, x, *y);
      return multiply(t, multiply(t, invert(t, sg.conj), c), sh.conj);
    }
    if (seen.size() > kOrbitLimit) continue;
    for (size_t id = 0; id < t.letters().size(); ++id) {
      const StableLetter& s = t.letters()[id];
      if (s.level <= L) continue;
      for (int sign : {1, -1}) {
        const auto& gens = sign > 0 ? s.source : s.target;
        const auto& images = sign > 0 ? s.target : s.source;
        std::vector<Element> low;
        for (const auto& c : gens)
          if (c.height() <= L) low.push_back(c);
        if (low.empty() || low.back().height() != L) continue;
        for_each_in_box(t, low, kSearchRadius, [&](const Element& a, const std::vector<int64_t>& lowe) {
          if (a.height() != L) return false;
          std::vector<int64_t> e(lowe);
          e.resize(gens.size(), 0);
          auto y = conjugate_in_level(t, node, a);
          if (!y) return false;
          // y^-1 node y = a, and s^-sign a s^sign = image
          Element img = abelian_product(t, images, e);
          CyclicSplit si = cyclic_decompose(t, img);
          Element step = multiply(t, *y, stable_generator(t, static_cast<int>(id), sign));
          step = multiply(t, step, invert(t, si.conj));
          if (!seen.count(si.core)) {
            seen.emplace(si.core, multiply(t, x, step));
            queue.push_back(si.core);
          }
          return false;
        });
      }
    }
  }
  return std::nullopt;
}

bool are_conjugate(const GroupTower& t, const Element& g, const Element& h) {
  return find_conjugator(t, g, h).has_value();
}

Centralizer centralizer(const GroupTower& t, const Element& g) {
  if (g.is_identity()) throw DomainError("centralizer", "the identity has a non-abelian centraliser");
  CyclicSplit s = cyclic_decompose(t, g);
  Element r = root(t, s.core);
  const int L = r.height();
  std::vector<Element> cands{r};
  auto add_gens = [&](const std::vector<Element>& gens) {
    for (const auto& c : gens) cands.push_back(c);
  };
  for (size_t id = 0; id < t.letters().size(); ++id) {
    const StableLetter& sl = t.letters()[id];
    if (sl.level > L) {
      bool in_source = abelian_membership(t, r, sl.source).has_value();
      bool in_target = abelian_membership(t, r, sl.target).has_value();
      if (in_source) add_gens(sl.source);
      if (in_target) add_gens(sl.target);
      if (in_source && apply_phi(t, static_cast<int>(id), r) == r)
        cands.push_back(stable_generator(t, static_cast<int>(id)));
    }
  }
  if (L >= 2) {
    for (const Block& b : r.blocks) {
      add_gens(t.letter(b.letter).source);
      add_gens(t.letter(b.letter).target);
    }
  }
  std::map<int, Element> by_height;
  for (const auto& c : cands) {
    if (c.is_identity() || !commutes(t, c, r)) continue;
    int h = c.height();
    auto it = by_height.find(h);
    if (it == by_height.end()) {
      by_height.emplace(h, c);
    } else if (it->second != r) {
      if (c == r || length(t, c) < length(t, it->second)) it->second = c;
    }
  }
  Centralizer out;
  out.conjugator = s.conj;
  std::vector<Element> basis;
  for (auto& [h, c] : by_height) {
    bool ok = std::all_of(basis.begin(), basis.end(), [&](const Element& b) { return commutes(t, b, c); });
    if (ok) basis.push_back(c);
  }
  for (const auto& b : basis) out.generators.push_back(conjugate_by(t, b, s.conj));
  return out;
}

}  // namespace znfree
