#include "znfree/pregroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "znfree/hnn.hpp"
#include "znfree/io.hpp"

namespace znfree {

namespace {

constexpr int kBox = 4;  // exponent radius when searching abelian subgroups

std::vector<Element> standard_gens_upto(const GroupTower& t, int level) {
  std::vector<Element> out;
  for (size_t i = 0; i < t.alphabet().size(); ++i) out.push_back(base_generator(static_cast<int>(i)));
  for (size_t id = 0; id < t.letters().size(); ++id)
    if (t.letter(static_cast<int>(id)).level <= level) out.push_back(stable_generator(t, static_cast<int>(id)));
  return out;
}

// Exponent vectors in [-kBox, kBox]^m, ordered by L1 norm so the first hit is small.
std::vector<std::vector<int64_t>> box_vectors(size_t m) {
  std::vector<std::vector<int64_t>> out{std::vector<int64_t>(m, 0)};
  for (size_t i = 0; i < m; ++i) {
    std::vector<std::vector<int64_t>> next;
    for (const auto& v : out)
      for (int64_t e = -kBox; e <= kBox; ++e) {
        auto w = v;
        w[i] = e;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  auto norm = [](const std::vector<int64_t>& v) {
    int64_t s = 0;
    for (auto x : v) s += std::llabs(x);
    return s;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return norm(a) < norm(b); });
  return out;
}

const std::vector<Element>& block_subgroup(const GroupTower& t, const Block& b) {
  return b.sign > 0 ? t.letter(b.letter).source : t.letter(b.letter).target;
}

bool same_blocks(const Element& x, const Element& f) { return x.level == f.level && x.blocks == f.blocks; }

// Echelon basis of the lattice spanned by rows, leading entries in distinct
// columns, ordered by leading column.
std::vector<std::vector<int64_t>> lattice_basis(std::vector<std::vector<int64_t>> rows, size_t m) {
  std::vector<std::vector<int64_t>> basis;
  for (size_t col = m; col-- > 0;) {
    while (true) {
      std::vector<size_t> live;
      for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i][col] != 0) live.push_back(i);
      if (live.size() <= 1) {
        if (live.size() == 1) {
          auto row = rows[live[0]];
          if (row[col] < 0)
            for (auto& x : row) x = -x;
          basis.push_back(row);
          rows.erase(rows.begin() + static_cast<long>(live[0]));
        }
        break;
      }
      size_t best = live[0];
      for (size_t i : live)
        if (std::llabs(rows[i][col]) < std::llabs(rows[best][col])) best = i;
      for (size_t i : live) {
        if (i == best) continue;
        int64_t q = rows[i][col] / rows[best][col];
        for (size_t k = 0; k < m; ++k) rows[i][k] -= q * rows[best][k];
      }
    }
  }
  std::reverse(basis.begin(), basis.end());
  return basis;
}

std::string seq_text(const GroupTower& t, const PSequence& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.items.size(); ++i) out += (i ? ", " : "") + render(t, s.items[i]);
  return out + "]";
}

}  // namespace

// ---- PzContext -------------------------------------------------------------

PzContext::PzContext(const GroupTower& t, const GenSet& z, bool require_reduced) : t_(&t) {
  if (require_reduced) {
    auto v = is_reduced(t, z);
    if (!v.empty()) throw DomainError("reduced-set", v.front());
  }
  for (const auto& g : z.gens) {
    if (lambda_of(t, g.value) == 0) {
      zero_.push_back(g.value);
    } else {
      letters_.push_back(g.value);
      letters_.push_back(invert(t, g.value));
    }
  }
  if (t.rank() >= 2) {
    zero_is_lower_level_ = true;
    for (const auto& s : standard_gens_upto(t, t.rank() - 1))
      if (!subgroup_contains(t, zero_, s)) {
        zero_is_lower_level_ = false;
        break;
      }
  }
}

bool PzContext::in_z0(const Element& x) const {
  if (lambda_of(*t_, x) != 0) return false;
  if (t_->rank() == 1) return x.is_identity();
  if (zero_is_lower_level_) return true;
  return subgroup_contains(*t_, zero_, x);
}

std::optional<PzShape> PzContext::shape(const Element& x) const {
  const GroupTower& t = *t_;
  if (lambda_of(t, x) == 0) {
    if (!in_z0(x)) return std::nullopt;
    return PzShape{std::nullopt, x, identity()};
  }
  for (const auto& f : letters_) {
    if (t.rank() == 1) {
      if (f == x) return PzShape{f, identity(), identity()};
      continue;
    }
    if (!same_blocks(x, f)) continue;
    const auto& gens = block_subgroup(t, f.blocks.front());
    Element f0inv = invert(t, f.pieces.front());
    Element finv = invert(t, f);
    for (const auto& e : box_vectors(gens.size())) {
      Element g = multiply(t, multiply(t, x.pieces.front(), abelian_product(t, gens, e)), f0inv);
      if (!in_z0(g)) continue;
      Element h = multiply(t, finv, multiply(t, invert(t, g), x));
      if (in_z0(h)) return PzShape{f, g, h};
    }
  }
  return std::nullopt;
}

bool PzContext::product_defined(const Element& x, const Element& y) const {
  auto sx = shape(x);
  auto sy = shape(y);
  if (!sx) throw DomainError("pz-membership", render(*t_, x) + " is not in P_Z");
  if (!sy) throw DomainError("pz-membership", render(*t_, y) + " is not in P_Z");
  if (!sx->letter || !sy->letter) return true;
  const GroupTower& t = *t_;
  if (!(*sx->letter == invert(t, *sy->letter))) return false;
  Element middle = multiply(t, sx->right, sy->left);
  Element conj = multiply(t, multiply(t, *sx->letter, middle), *sy->letter);
  return in_z0(conj);
}

PSequence PzContext::reduce(const PSequence& seq) const {
  std::vector<Element> items = seq.items;
  bool merged = true;
  while (merged && items.size() > 1) {
    merged = false;
    for (size_t i = 0; i + 1 < items.size(); ++i) {
      if (!product_defined(items[i], items[i + 1])) continue;
      items[i] = multiply(*t_, items[i], items[i + 1]);
      items.erase(items.begin() + static_cast<long>(i) + 1);
      merged = true;
      break;
    }
  }
  return PSequence{items};
}

bool pz_membership(const GroupTower& t, const GenSet& z, const Element& x) { return PzContext(t, z).member(x); }

bool pz_product_defined(const GroupTower& t, const GenSet& z, const Element& x, const Element& y) {
  return PzContext(t, z).product_defined(x, y);
}

PSequence reduce_psequence(const GroupTower& t, const GenSet& z, const PSequence& seq) {
  return PzContext(t, z).reduce(seq);
}

Element psequence_product(const GroupTower& t, const PSequence& seq) {
  Element acc = identity();
  for (const auto& x : seq.items) acc = multiply(t, acc, x);
  return acc;
}

// ---- sampling and verification ---------------------------------------------

namespace {

Element zero_word(const PzContext& ctx, std::mt19937_64& rng) {
  const auto& zs = ctx.zero_gens();
  Element acc = identity();
  if (zs.empty()) return acc;
  int n = static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i) {
    const Element& g = zs[rng() % zs.size()];
    acc = multiply(ctx.tower(), acc, rng() % 2 ? g : invert(ctx.tower(), g));
  }
  return acc;
}

}  // namespace

Element sample_pz_item(const PzContext& ctx, std::mt19937_64& rng, bool allow_zero) {
  const GroupTower& t = ctx.tower();
  if (ctx.letters().empty() || (allow_zero && rng() % 4 == 0)) return zero_word(ctx, rng);
  const Element& f = ctx.letters()[rng() % ctx.letters().size()];
  return multiply(t, multiply(t, zero_word(ctx, rng), f), zero_word(ctx, rng));
}

AxiomReport verify_pregroup(const GroupTower& t, const GenSet& z, int sample_size, uint64_t seed) {
  AxiomReport r;
  PzContext ctx(t, z, false);
  std::mt19937_64 rng(seed);
  auto fail = [&](const std::string& name, const PSequence& s, const std::string& detail) {
    r.violations.push_back(name + " seq=" + seq_text(t, s) + " detail=" + detail);
  };
  for (int i = 0; i < sample_size; ++i) {
    PSequence seq;
    size_t len = 1 + rng() % 5;
    for (size_t k = 0; k < len; ++k) seq.items.push_back(sample_pz_item(ctx, rng));
    try {
      for (const auto& x : seq.items) {
        ++r.checked["inverse"];
        if (!ctx.member(invert(t, x))) fail("inverse", seq, "inverse of " + render(t, x) + " leaves P_Z");
      }
      Element product = psequence_product(t, seq);
      PSequence first = ctx.reduce(seq);
      if (!(psequence_product(t, first) == product)) fail("product", seq, "reduction changed the product");

      ++r.checked["additivity"];
      int64_t sum = 0;
      for (const auto& x : first.items) sum += lambda_of(t, x);
      if (sum != lambda_of(t, product))
        fail("additivity", first, "sum of weights " + std::to_string(sum) + " != weight of product " +
                                      std::to_string(lambda_of(t, product)));

      // Independent refactorization: shift weight-zero factors across
      // boundaries, insert cancelling letter pairs and split items.
      PSequence other = seq;
      for (size_t k = 0; k + 1 < other.items.size(); ++k) {
        if (rng() % 2) continue;
        Element c = zero_word(ctx, rng);
        other.items[k] = multiply(t, other.items[k], c);
        other.items[k + 1] = multiply(t, invert(t, c), other.items[k + 1]);
      }
      if (!ctx.letters().empty() && rng() % 2) {
        const Element& f = ctx.letters()[rng() % ctx.letters().size()];
        size_t at = rng() % (other.items.size() + 1);
        other.items.insert(other.items.begin() + static_cast<long>(at), {f, invert(t, f)});
      }
      for (size_t k = 0; k < other.items.size(); ++k) {
        auto s = ctx.shape(other.items[k]);
        if (!s || !s->letter || rng() % 3) continue;
        Element head = s->left, tail = multiply(t, *s->letter, s->right);
        other.items[k] = head;
        other.items.insert(other.items.begin() + static_cast<long>(k) + 1, tail);
        break;
      }
      PSequence second = ctx.reduce(other);
      ++r.checked["equal-length"];
      if (!(psequence_product(t, second) == product)) fail("product", other, "refactorization changed the product");
      if (first.items.size() != second.items.size())
        fail("equal-length", seq, "reduced lengths " + std::to_string(first.items.size()) + " and " +
                                      std::to_string(second.items.size()) + " via " + seq_text(t, second));
    } catch (const std::exception& e) {
      fail("membership", seq, e.what());
    }
  }
  return r;
}

// ---- level splitting ---------------------------------------------------------

LevelSplit split_level(const GroupTower& t, const GenSet& z) {
  LevelSplit out;
  out.level = t.rank();
  if (t.rank() == 1) {
    for (const auto& g : z.gens) out.base_gens.push_back(g.value);
    return out;
  }
  PzContext ctx(t, z);
  for (const auto& g : ctx.zero_gens()) out.base_gens.push_back(g);
  for (const auto& s : standard_gens_upto(t, t.rank() - 1))
    if (!subgroup_contains(t, ctx.zero_gens(), s))
      throw DomainError("base-generation", "<Z0> misses " + render(t, s));

  GroupTower lower = t.truncated(t.rank() - 1);
  std::vector<Element> plus;
  for (const auto& g : z.gens)
    if (lambda_of(t, g.value) > 0) plus.push_back(g.value);
  std::sort(plus.begin(), plus.end(),
            [&](const Element& a, const Element& b) { return render(t, a) < render(t, b); });
  int fresh = 1;
  std::vector<std::string> used;
  for (const auto& f : plus) {
    SplitLetter s;
    s.generator = f;
    s.element = f;
    for (int id : t.letters_at(t.rank()))
      if (stable_generator(t, id) == f) s.name = t.letter(id).name;
    if (s.name.empty() || lower.has_name(s.name)) {
      do s.name = "y" + std::to_string(fresh++);
      while (lower.has_name(s.name) || std::count(used.begin(), used.end(), s.name));
    }
    used.push_back(s.name);

    const auto& gens = block_subgroup(t, f.blocks.front());
    const Element& f0 = f.pieces.front();
    Element f0inv = invert(t, f0), finv = invert(t, f);
    auto conj_into = [&](const std::vector<int64_t>& e) {
      return multiply(t, multiply(t, f0, abelian_product(t, gens, e)), f0inv);
    };
    std::vector<std::vector<int64_t>> valid;
    for (const auto& e : box_vectors(gens.size())) {
      if (std::all_of(e.begin(), e.end(), [](int64_t x) { return x == 0; })) continue;
      if (lambda_of(t, multiply(t, multiply(t, finv, conj_into(e)), f)) == 0) valid.push_back(e);
    }
    for (const auto& row : lattice_basis(valid, gens.size())) {
      Element src = conj_into(row);
      s.source.push_back(src);
      s.target.push_back(multiply(t, multiply(t, finv, src), f));
    }
    if (!s.source.empty()) {
      auto x = find_conjugator(lower, s.target.back(), s.source.back());
      if (x && !x->is_identity()) {
        for (auto& d : s.target) d = conjugate_by(lower, d, *x);
        s.twist = *x;
        s.element = multiply(t, f, *x);
      }
    }
    out.letters.push_back(std::move(s));
  }
  return out;
}

GroupTower rebuild_level(const GroupTower& t, const LevelSplit& split) {
  if (split.level <= 1) return t;
  GroupTower out = t.truncated(split.level - 1);
  bool first = true;
  for (const auto& s : split.letters) {
    if (s.source.empty())
      throw DomainError("split-level", "letter " + s.name + " has a trivial associated subgroup");
    out = extend_hnn(out, s.source, s.target, s.name, !first);
    first = false;
  }
  return out;
}

std::vector<std::string> split_roundtrip_failures(const GroupTower& t) {
  std::vector<std::string> out;
  if (t.rank() == 1) return out;
  const int n = t.rank();
  std::vector<Element> standard = standard_gens_upto(t, n);
  ReduceResult red = reduce_genset(t, make_genset(t, standard));
  for (const auto& v : is_reduced(t, red.set)) out.push_back("reduce: " + v);
  if (!out.empty()) return out;
  LevelSplit split = split_level(t, red.set);
  GroupTower rebuilt = rebuild_level(t, split);

  const int first_new = static_cast<int>(rebuilt.letters().size() - split.letters.size());
  std::map<int, Element> image;
  for (const auto& g : red.set.gens) {
    if (lambda_of(t, g.value) == 0) {
      image[g.id] = g.value;
      continue;
    }
    for (size_t k = 0; k < split.letters.size(); ++k)
      if (split.letters[k].generator == g.value)
        image[g.id] = multiply(rebuilt, presented_letter(rebuilt, first_new + static_cast<int>(k)),
                               invert(rebuilt, split.letters[k].twist));
  }
  auto image_of = [&](const GenWord& w) {
    Element acc = identity();
    for (auto s : expand(red.set, w)) {
      const Element& v = image.at(s.id);
      acc = multiply(rebuilt, acc, s.sign > 0 ? v : invert(rebuilt, v));
    }
    return acc;
  };
  for (size_t i = 0; i < standard.size(); ++i) {
    Element img = image_of(red.set.originals[i]);
    if (standard[i].level < n) {
      if (!(img == standard[i])) out.push_back("generator " + render(t, standard[i]) + " maps to " + render(rebuilt, img));
      continue;
    }
    int id = standard[i].blocks.front().letter;
    const StableLetter& s = t.letter(id);
    for (size_t j = 0; j < s.source.size(); ++j) {
      Element lhs = multiply(rebuilt, multiply(rebuilt, invert(rebuilt, img), s.source[j]), img);
      if (!(lhs == s.target[j]))
        out.push_back("relation of " + s.name + " on " + render(t, s.source[j]) + " fails in the rebuilt tower");
    }
  }
  return out;
}

}  // namespace znfree
