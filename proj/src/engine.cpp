#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "znfree/tower.hpp"

namespace znfree {

namespace {

Element lift(const Element& g, int k) {
  if (g.level == k) return g;
  Element e;
  e.level = k;
  e.pieces = {g};
  return e;
}

Element collapse(Element e) {
  while (e.level >= 2 && e.blocks.empty()) {
    Element inner = std::move(e.pieces.front());
    e = std::move(inner);
  }
  return e;
}

// Restores normal form at level k after pieces flagged dirty were modified.
// Piece j is reduced to its coset representative relative to the subgroup
// attached to block j and the remainder slides across the block into piece
// j+1. A representative equal to 1 between inverse blocks is a pinch and the
// two blocks cancel.
Element normalize(const GroupTower& t, int k, std::vector<Element> pieces,
                  std::vector<Block> blocks, std::vector<char> dirty) {
  size_t j = 0;
  while (j < blocks.size()) {
    if (!dirty[j]) {
      ++j;
      continue;
    }
    dirty[j] = 0;
    const Block b = blocks[j];
    const StableLetter& letter = t.letter(b.letter);
    const auto& gens = b.sign > 0 ? letter.source : letter.target;
    const auto& images = b.sign > 0 ? letter.target : letter.source;
    CosetSplit split = canon_coset(t, pieces[j], gens);
    bool moved = std::any_of(split.exps.begin(), split.exps.end(), [](int64_t e) { return e != 0; });
    if (j >= 1 && split.rep.is_identity() && blocks[j - 1].letter == b.letter &&
        blocks[j - 1].sign == -b.sign) {
      Element image = abelian_product(t, images, split.exps);
      pieces[j - 1] = multiply(t, multiply(t, pieces[j - 1], image), pieces[j + 1]);
      pieces.erase(pieces.begin() + static_cast<long>(j), pieces.begin() + static_cast<long>(j + 2));
      dirty.erase(dirty.begin() + static_cast<long>(j), dirty.begin() + static_cast<long>(j + 2));
      blocks.erase(blocks.begin() + static_cast<long>(j - 1), blocks.begin() + static_cast<long>(j + 1));
      dirty[j - 1] = 1;
      --j;
      continue;
    }
    pieces[j] = std::move(split.rep);
    if (moved) {
      pieces[j + 1] = multiply(t, abelian_product(t, images, split.exps), pieces[j + 1]);
      dirty[j + 1] = 1;
    }
    ++j;
  }
  Element e;
  e.level = k;
  e.pieces = std::move(pieces);
  e.blocks = std::move(blocks);
  return collapse(std::move(e));
}

// Coordinate at height ht of |x|, for x of height at most ht.
int64_t top_coordinate(const Element& x, int ht) {
  if (x.level != ht) return 0;
  if (ht == 1) return static_cast<int64_t>(x.word.size());
  return static_cast<int64_t>(x.blocks.size());
}

bool rep_less(const GroupTower& t, const Element& a, const Element& b) {
  if (a.level == 1 && b.level == 1) return a < b;
  LambdaVec la = length(t, a), lb = length(t, b);
  if (la != lb) return la < lb;
  return a < b;
}

void canon_rec(const GroupTower& t, const Element& g, const std::vector<Element>& gens, size_t m,
               Element& rep, std::vector<int64_t>& exps) {
  if (m == 0) {
    rep = g;
    return;
  }
  const Element& top = gens[m - 1];
  const int ht = top.height();
  const int hg = g.height();
  if (hg > ht) {
    Element inner;
    canon_rec(t, g.pieces.back(), gens, m, inner, exps);
    rep = g;
    rep.pieces.back() = std::move(inner);
    return;
  }
  if (hg < ht) {
    exps[m - 1] = 0;
    canon_rec(t, g, gens, m - 1, rep, exps);
    return;
  }
  const int64_t cg = top_coordinate(g, ht);
  const int64_t ct = top_coordinate(top, ht);
  const int64_t bound = 2 * cg / ct + 1;
  Element x = multiply(t, g, power(t, top, -bound));
  int64_t best = std::numeric_limits<int64_t>::max();
  std::vector<std::pair<int64_t, Element>> ties;
  for (int64_t e = -bound; e <= bound; ++e) {
    int64_t c = top_coordinate(x, ht);
    if (c < best) {
      best = c;
      ties.clear();
    }
    if (c == best) ties.emplace_back(e, x);
    if (e < bound) x = multiply(t, x, top);
  }
  bool have = false;
  for (auto& [e, cand] : ties) {
    Element r;
    std::vector<int64_t> sub(m - 1, 0);
    canon_rec(t, cand, gens, m - 1, r, sub);
    if (!have || rep_less(t, r, rep)) {
      have = true;
      rep = std::move(r);
      std::copy(sub.begin(), sub.end(), exps.begin());
      exps[m - 1] = -e;
    }
  }
}

LambdaVec zero_length(const GroupTower& t) { return LambdaVec(t.rank()); }

int64_t stabilization_cap(const GroupTower& t, const LambdaVec& piece_len, const LambdaVec& period_len) {
  int h = period_len.height();
  int64_t c = h ? std::llabs(piece_len[h - 1]) / period_len[h - 1] : 0;
  (void)t;
  return 64 + 4 * (c + 1);
}

}  // namespace

// ---- multiplication ------------------------------------------------------

Element multiply(const GroupTower& t, const Element& g, const Element& h) {
  if (g.is_identity()) return h;
  if (h.is_identity()) return g;
  if (g.level == 1 && h.level == 1) return Element::from_word(concat_reduce(g.word, h.word));
  const int k = std::max(g.level, h.level);
  Element G = lift(g, k);
  Element H = lift(h, k);
  const size_t j = G.blocks.size();
  std::vector<Element> pieces;
  pieces.reserve(G.pieces.size() + H.pieces.size() - 1);
  for (size_t i = 0; i < j; ++i) pieces.push_back(std::move(G.pieces[i]));
  pieces.push_back(multiply(t, G.pieces[j], H.pieces[0]));
  for (size_t i = 1; i < H.pieces.size(); ++i) pieces.push_back(std::move(H.pieces[i]));
  std::vector<Block> blocks = std::move(G.blocks);
  blocks.insert(blocks.end(), H.blocks.begin(), H.blocks.end());
  std::vector<char> dirty(pieces.size(), 0);
  dirty[j] = 1;
  return normalize(t, k, std::move(pieces), std::move(blocks), std::move(dirty));
}

Element multiply(const GroupTower& t, std::initializer_list<const Element*> factors) {
  Element acc;
  for (const Element* f : factors) acc = multiply(t, acc, *f);
  return acc;
}

Element invert(const GroupTower& t, const Element& g) {
  if (g.level == 1) return Element::from_word(invert_word(g.word));
  std::vector<Element> pieces;
  pieces.reserve(g.pieces.size());
  for (auto it = g.pieces.rbegin(); it != g.pieces.rend(); ++it) pieces.push_back(invert(t, *it));
  std::vector<Block> blocks;
  for (auto it = g.blocks.rbegin(); it != g.blocks.rend(); ++it) blocks.push_back(Block{it->letter, -it->sign});
  std::vector<char> dirty(pieces.size(), 1);
  return normalize(t, g.level, std::move(pieces), std::move(blocks), std::move(dirty));
}

Element power(const GroupTower& t, const Element& g, int64_t k) {
  if (k < 0) return power(t, invert(t, g), -k);
  Element acc;
  Element base = g;
  while (k > 0) {
    if (k & 1) acc = multiply(t, acc, base);
    k >>= 1;
    if (k) base = multiply(t, base, base);
  }
  return acc;
}

Element conjugate_by(const GroupTower& t, const Element& g, const Element& x) {
  return multiply(t, multiply(t, invert(t, x), g), x);
}

bool equals(const GroupTower&, const Element& g, const Element& h) { return g == h; }

bool commutes(const GroupTower& t, const Element& g, const Element& h) {
  return multiply(t, g, h) == multiply(t, h, g);
}

// ---- abelian subgroups ------------------------------------------------------

CosetSplit canon_coset(const GroupTower& t, const Element& g, const std::vector<Element>& gens) {
  CosetSplit s;
  s.exps.assign(gens.size(), 0);
  canon_rec(t, g, gens, gens.size(), s.rep, s.exps);
  return s;
}

std::optional<std::vector<int64_t>> abelian_membership(const GroupTower& t, const Element& g,
                                                       const std::vector<Element>& gens) {
  CosetSplit s = canon_coset(t, g, gens);
  if (!s.rep.is_identity()) return std::nullopt;
  return s.exps;
}

Element abelian_product(const GroupTower& t, const std::vector<Element>& gens,
                        const std::vector<int64_t>& exps) {
  Element acc;
  for (size_t i = 0; i < gens.size(); ++i)
    if (exps[i] != 0) acc = multiply(t, acc, power(t, gens[i], exps[i]));
  return acc;
}

Element apply_phi(const GroupTower& t, int letter, const Element& a, bool inverse) {
  const StableLetter& l = t.letter(letter);
  const auto& from = inverse ? l.target : l.source;
  const auto& to = inverse ? l.source : l.target;
  auto exps = abelian_membership(t, a, from);
  if (!exps) throw DomainError("membership", "element outside the associated subgroup of " + l.name);
  return abelian_product(t, to, *exps);
}

// ---- lengths ----------------------------------------------------------------

CircleDecomposition circle_decompose(const GroupTower& t, const Element& g) {
  CircleDecomposition d;
  if (g.level == 1) {
    d.pieces = {g};
    d.offsets = {0};
    d.piece_lengths = {length(t, g)};
    return d;
  }
  const size_t nb = g.blocks.size();
  d.blocks = g.blocks;
  d.pieces.resize(nb + 1);
  d.offsets.assign(nb + 1, 0);
  d.piece_lengths.resize(nb + 1);
  const LambdaVec zero = zero_length(t);
  for (size_t j = 0; j <= nb; ++j) {
    const Element* tail = j > 0 ? &t.tail(g.blocks[j - 1]) : nullptr;
    const Element* head = j < nb ? &t.head(g.blocks[j]) : nullptr;
    LambdaVec lt = tail ? t.periods(g.blocks[j - 1].letter).period_length : zero;
    LambdaVec lh = head ? t.periods(g.blocks[j].letter).period_length : zero;
    Element x = g.pieces[j];
    LambdaVec lx = length(t, x);
    int64_t cap = (tail ? stabilization_cap(t, lx, lt) : 0) + (head ? stabilization_cap(t, lx, lh) : 0);
    int64_t K = 0;
    for (;;) {
      Element y = x;
      if (tail) y = multiply(t, *tail, y);
      if (head) y = multiply(t, y, *head);
      LambdaVec ly = length(t, y);
      if (ly == lt + lx + lh) break;
      x = std::move(y);
      lx = std::move(ly);
      if (++K > cap) throw StabilizationError("junction did not stabilise; tower violates orientation conditions");
    }
    d.pieces[j] = std::move(x);
    d.piece_lengths[j] = std::move(lx);
    d.offsets[j] = K;
  }
  const LambdaVec unit = LambdaVec::unit(t.rank(), g.level - 1);
  for (size_t j = 0; j < nb; ++j) {
    const LambdaVec& pl = t.periods(g.blocks[j].letter).period_length;
    d.block_lengths.push_back(unit - (d.offsets[j] + d.offsets[j + 1]) * pl);
  }
  return d;
}

Element block_value(const GroupTower& t, const CircleDecomposition& d, size_t j) {
  const Block& b = d.blocks[j];
  Element v = power(t, t.head(b), -d.offsets[j]);
  v = multiply(t, v, stable_generator(t, b.letter, b.sign));
  return multiply(t, v, power(t, t.tail(b), -d.offsets[j + 1]));
}

LambdaVec length(const GroupTower& t, const Element& g) {
  LambdaVec v(t.rank());
  if (g.level == 1) {
    v[0] = static_cast<int64_t>(g.word.size());
    return v;
  }
  CircleDecomposition d = circle_decompose(t, g);
  for (const auto& l : d.piece_lengths) v += l;
  for (const auto& l : d.block_lengths) v += l;
  return v;
}

int64_t lambda_of(const GroupTower& t, const Element& g) {
  if (t.rank() == 1) return static_cast<int64_t>(g.word.size());
  return g.level == t.rank() ? static_cast<int64_t>(g.block_count()) : 0;
}

LambdaVec gromov_doubled(const GroupTower& t, const Element& g, const Element& f) {
  return length(t, g) + length(t, f) - length(t, multiply(t, invert(t, g), f));
}

LambdaVec gromov(const GroupTower& t, const Element& g, const Element& f) {
  LambdaVec half;
  if (!gromov_doubled(t, g, f).halve(half)) throw DomainError("L4", "Gromov product is not an integer length");
  return half;
}

Element prefix(const GroupTower& t, const Element& g, const LambdaVec& l) {
  const LambdaVec zero = zero_length(t);
  if (l < zero) throw DomainError("prefix", "negative length " + l.str());
  if (l == zero) return identity();
  if (g.level == 1) {
    if (l.height() > 1 || l[0] > static_cast<int64_t>(g.word.size()))
      throw DomainError("prefix", "length " + l.str() + " exceeds the element");
    return Element::from_word(Word(g.word.begin(), g.word.begin() + l[0]));
  }
  CircleDecomposition d = circle_decompose(t, g);
  Element acc;
  LambdaVec used = zero;
  const size_t nb = d.blocks.size();
  for (size_t j = 0; j <= nb; ++j) {
    LambdaVec rem = l - used;
    if (rem <= d.piece_lengths[j]) return multiply(t, acc, prefix(t, d.pieces[j], rem));
    acc = multiply(t, acc, d.pieces[j]);
    used += d.piece_lengths[j];
    if (j == nb) break;
    rem = l - used;
    const LambdaVec& bl = d.block_lengths[j];
    if (rem <= bl) {
      const Block& b = d.blocks[j];
      const LambdaVec& pl = t.periods(b.letter).period_length;
      int64_t q;
      LambdaVec r;
      if (rem[g.level - 1] == 0) {
        if (!divide_by_period(rem, pl, q, r))
          throw DomainError("prefix", "length " + l.str() + " is not attained");
        const Element& h = t.head(b);
        return multiply(t, acc, multiply(t, power(t, h, q), prefix(t, h, r)));
      }
      LambdaVec back = bl - rem;
      if (!divide_by_period(back, pl, q, r))
        throw DomainError("prefix", "length " + l.str() + " is not attained");
      const Element& tl = t.tail(b);
      Element v = multiply(t, acc, block_value(t, d, j));
      v = multiply(t, v, power(t, tl, -q));
      return multiply(t, v, prefix(t, invert(t, tl), r));
    }
    acc = multiply(t, acc, block_value(t, d, j));
    used += bl;
  }
  throw DomainError("prefix", "length " + l.str() + " exceeds the element");
}

Element com(const GroupTower& t, const Element& g, const Element& h) { return prefix(t, g, gromov(t, g, h)); }

bool is_cyclically_reduced(const GroupTower& t, const Element& g) {
  if (g.is_identity()) return true;
  return length(t, multiply(t, g, g)) == 2 * length(t, g);
}

CyclicSplit cyclic_decompose(const GroupTower& t, const Element& g) {
  Element c_inv = com(t, g, invert(t, g));
  CyclicSplit s;
  s.conj = invert(t, c_inv);
  s.core = multiply(t, multiply(t, s.conj, g), c_inv);
  return s;
}

Element root(const GroupTower& t, const Element& g, int64_t* exponent) {
  if (g.is_identity()) {
    if (exponent) *exponent = 0;
    return g;
  }
  CyclicSplit s = cyclic_decompose(t, g);
  LambdaVec len = length(t, s.core);
  int64_t gc = 0;
  for (int64_t c : len.coords()) gc = std::gcd(gc, std::llabs(c));
  for (int64_t k = gc; k >= 2; --k) {
    if (gc % k) continue;
    LambdaVec part = len;
    for (int i = 0; i < part.rank(); ++i) part[i] /= k;
    Element r;
    try {
      r = prefix(t, s.core, part);
    } catch (const DomainError&) {
      continue;
    }
    if (power(t, r, k) == s.core) {
      if (exponent) *exponent = k;
      return conjugate_by(t, r, s.conj);
    }
  }
  if (exponent) *exponent = 1;
  return g;
}

bool is_proper_power(const GroupTower& t, const Element& g) {
  int64_t k = 0;
  root(t, g, &k);
  return k > 1;
}

std::pair<Element, int64_t> strip_periodic(const GroupTower& t, const Element& g, const Element& p,
                                           bool from_left) {
  if (p.is_identity()) return {g, 0};
  const LambdaVec lp = length(t, p);
  const Element p_inv = invert(t, p);
  Element cur = g;
  LambdaVec lc = length(t, cur);
  int64_t count = 0;
  const int hp = lp.height();
  const int64_t cap = 64 + 2 * std::llabs(lc[hp - 1]) / lp[hp - 1];
  for (int dir : {1, -1}) {
    const Element& peel = dir > 0 ? p_inv : p;
    for (;;) {
      Element next = from_left ? multiply(t, peel, cur) : multiply(t, cur, peel);
      LambdaVec ln = length(t, next);
      if (ln != lc - lp) break;
      cur = std::move(next);
      lc = std::move(ln);
      count += dir;
      if (std::llabs(count) > cap) throw StabilizationError("periodic strip did not terminate");
    }
    if (count != 0) break;
  }
  return {cur, count};
}

}  // namespace znfree
