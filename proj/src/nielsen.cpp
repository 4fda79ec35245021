#include "znfree/nielsen.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "znfree/io.hpp"

namespace znfree {

namespace {

GenWord inverse_word(const GenWord& w) {
  GenWord r(w.rbegin(), w.rend());
  for (auto& s : r) s.sign = -s.sign;
  return r;
}

GenWord join(std::initializer_list<GenWord> parts) {
  GenWord r;
  for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
  return r;
}

bool is_plus(const GroupTower& t, const Element& x) { return lambda_of(t, x) > 0; }

// The first stable-letter block at the top level, or the first letter of a
// base word when the tower has a single level. Two elements can only share a
// prefix of positive weight when these agree.
std::pair<int, int> leading_symbol(const Element& x) {
  if (x.level == 1) return {0, x.word.empty() ? 0 : x.word.front()};
  return {x.blocks.front().letter + 1, x.blocks.front().sign};
}

struct SignedValue {
  SignedGen gen;
  Element value;
  Element inverse;
  std::string text;
  int64_t weight;
  std::pair<int, int> lead;
};

std::vector<SignedValue> plus_values(const GroupTower& t, const GenSet& y, bool both_signs) {
  std::vector<SignedValue> out;
  for (const auto& g : y.gens) {
    int64_t w = lambda_of(t, g.value);
    if (w <= 0) continue;
    Element inv = invert(t, g.value);
    out.push_back({{g.id, 1}, g.value, inv, render(t, g.value), w, leading_symbol(g.value)});
    if (both_signs) out.push_back({{g.id, -1}, inv, g.value, render(t, inv), w, leading_symbol(inv)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.text < b.text; });
  return out;
}

std::string word_text(const GenWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << " ";
    os << "y" << w[i].id;
    if (w[i].sign < 0) os << "^-1";
  }
  return os.str();
}

// Folded graph of a subgroup of the base free group.
class FoldedGraph {
 public:
  explicit FoldedGraph(const std::vector<Word>& gens) {
    fresh();
    for (const auto& w : gens) {
      if (w.empty()) continue;
      int v = 0;
      for (size_t i = 0; i < w.size(); ++i) {
        int next = (i + 1 == w.size()) ? 0 : fresh();
        add(v, w[i], next);
        v = next;
      }
    }
    fold();
  }

  bool accepts(const Word& w) {
    int v = 0;
    for (int x : w) {
      v = find(v);
      auto it = out_[v].find(x);
      if (it == out_[v].end()) return false;
      v = it->second;
    }
    return find(v) == find(0);
  }

 private:
  int fresh() {
    parent_.push_back(static_cast<int>(parent_.size()));
    out_.emplace_back();
    return parent_.back();
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void half(int v, int x, int w) {
    auto it = out_[v].find(x);
    if (it == out_[v].end()) {
      out_[v][x] = w;
    } else if (find(it->second) != w) {
      pending_.push_back({find(it->second), w});
    }
  }
  void add(int v, int x, int w) {
    v = find(v);
    w = find(w);
    half(v, x, w);
    half(w, -x, v);
  }
  void fold() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (b == 0) std::swap(a, b);
      parent_[b] = a;
      auto moved = std::move(out_[b]);
      out_[b].clear();
      for (auto [x, w] : moved) add(a, x, w);
    }
  }

  std::vector<int> parent_;
  std::vector<std::map<int, int>> out_;
  std::vector<std::pair<int, int>> pending_;
};

std::vector<Element> standard_generators(const GroupTower& t, int level) {
  std::vector<Element> out;
  for (int i = 0; i < static_cast<int>(t.alphabet().size()); ++i) out.push_back(base_generator(i));
  for (int id = 0; id < static_cast<int>(t.letters().size()); ++id)
    if (t.letter(id).level <= level) out.push_back(stable_generator(t, id));
  return out;
}

}  // namespace

// ---- GenSet ---------------------------------------------------------------

const Element* GenSet::find(int id) const {
  for (const auto& g : gens)
    if (g.id == id) return &g.value;
  return nullptr;
}

GenWord GenSet::add(const GroupTower& t, const Element& x) {
  if (x.is_identity()) return {};
  for (const auto& g : gens) {
    if (g.value == x) return {{g.id, 1}};
  }
  Element inv = invert(t, x);
  for (const auto& g : gens) {
    if (g.value == inv) return {{g.id, -1}};
  }
  gens.push_back({next_id, x});
  return {{next_id++, 1}};
}

void GenSet::remove(int id, GenWord expression) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), [id](const Gen& g) { return g.id == id; }),
             gens.end());
  expansions[id] = std::move(expression);
}

GenSet make_genset(const GroupTower& t, const std::vector<Element>& elements) {
  GenSet y;
  for (const auto& e : elements) y.originals.push_back(y.add(t, e));
  return y;
}

int64_t lambda_weight(const GroupTower& t, const GenSet& y) {
  int64_t total = 0;
  for (const auto& g : y.gens) total += lambda_of(t, g.value);
  return total;
}

GenWord expand(const GenSet& y, const GenWord& w) {
  GenWord out;
  std::function<void(SignedGen)> emit = [&](SignedGen s) {
    auto it = y.expansions.find(s.id);
    if (it == y.expansions.end()) {
      out.push_back(s);
      return;
    }
    GenWord sub = s.sign > 0 ? it->second : inverse_word(it->second);
    for (auto x : sub) emit(x);
  };
  for (auto s : w) emit(s);
  return out;
}

Element evaluate(const GroupTower& t, const GenSet& y, const GenWord& w) {
  Element acc = identity();
  for (auto s : expand(y, w)) {
    const Element* v = y.find(s.id);
    if (!v) throw std::logic_error("unknown generator id " + std::to_string(s.id));
    acc = multiply(t, acc, s.sign > 0 ? *v : invert(t, *v));
  }
  return acc;
}

// ---- ball of <Y0> -----------------------------------------------------------

std::vector<BallElement> y0_ball(const GroupTower& t, const GenSet& y, const NielsenOptions& opt) {
  std::vector<std::pair<SignedGen, Element>> steps;
  for (const auto& g : y.gens) {
    if (is_plus(t, g.value)) continue;
    steps.push_back({{g.id, 1}, g.value});
    steps.push_back({{g.id, -1}, invert(t, g.value)});
  }
  std::map<Element, GenWord> seen;
  seen[identity()] = {};
  std::vector<std::pair<Element, GenWord>> layer{{identity(), {}}};
  for (int r = 0; r < opt.radius && !layer.empty() && seen.size() < opt.ball_limit; ++r) {
    std::vector<std::pair<Element, GenWord>> next;
    for (const auto& [x, w] : layer) {
      for (const auto& [s, v] : steps) {
        if (!w.empty() && w.back().id == s.id && w.back().sign == -s.sign) continue;
        Element xv = multiply(t, x, v);
        if (seen.count(xv)) continue;
        GenWord wv = w;
        wv.push_back(s);
        seen[xv] = wv;
        next.push_back({xv, wv});
        if (seen.size() >= opt.ball_limit) break;
      }
      if (seen.size() >= opt.ball_limit) break;
    }
    layer = std::move(next);
  }
  std::vector<BallElement> out;
  out.reserve(seen.size());
  for (auto& [x, w] : seen) out.push_back({x, w, render(t, x)});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.text.size() != b.text.size() ? a.text.size() < b.text.size() : a.text < b.text;
  });
  return out;
}

// ---- transformations --------------------------------------------------------

namespace {

struct Resolved {
  Element value;
  int64_t weight;
};

std::optional<Resolved> resolve_plus(const GroupTower& t, const GenSet& y, SignedGen s) {
  const Element* v = y.find(s.id);
  if (!v) return std::nullopt;
  Element x = s.sign > 0 ? *v : invert(t, *v);
  int64_t w = lambda_of(t, x);
  if (w <= 0) return std::nullopt;
  return Resolved{x, w};
}

std::optional<Element> resolve_y0_word(const GroupTower& t, const GenSet& y, const GenWord& h) {
  Element acc = identity();
  for (auto s : h) {
    const Element* v = y.find(s.id);
    if (!v || is_plus(t, *v)) return std::nullopt;
    acc = multiply(t, acc, s.sign > 0 ? *v : invert(t, *v));
  }
  return acc;
}

// Expression for the positive generator of id given an expression for
// value^sign.
GenWord for_id(SignedGen s, const GenWord& expr) { return s.sign > 0 ? expr : inverse_word(expr); }

}  // namespace

std::optional<GenSet> mu(const GroupTower& t, const GenSet& y, SignedGen f, SignedGen g, const GenWord& h) {
  if (f == g) return std::nullopt;
  auto fr = resolve_plus(t, y, f);
  auto gr = resolve_plus(t, y, g);
  auto hv = resolve_y0_word(t, y, h);
  if (!fr || !gr || !hv) return std::nullopt;
  Element hg = multiply(t, *hv, gr->value);
  Element u = com(t, fr->value, hg);
  if (lambda_of(t, u) <= 0) return std::nullopt;

  GenSet out = y;
  Element uinv = invert(t, u);
  Element w2 = multiply(t, uinv, hg);
  auto drop = [&](int id) {
    out.gens.erase(std::remove_if(out.gens.begin(), out.gens.end(),
                                  [id](const GenSet::Gen& x) { return x.id == id; }),
                   out.gens.end());
  };
  if (f.id == g.id) {
    // f = g^-1 and h*g = u o w2, so g = h^-1 * u * (w2*u) * u^-1.
    drop(g.id);
    GenWord uw = out.add(t, u);
    GenWord w2u = out.add(t, multiply(t, w2, u));
    out.remove(g.id, for_id(g, join({inverse_word(h), uw, w2u, inverse_word(uw)})));
  } else {
    // f = u o w1 and h*g = u o w2.
    Element w1 = multiply(t, uinv, fr->value);
    Element middle = multiply(t, invert(t, fr->value), hg);
    drop(f.id);
    drop(g.id);
    GenWord w1w = out.add(t, w1);
    GenWord w2w = out.add(t, w2);
    GenWord uw = out.add(t, u);
    if (lambda_of(t, middle) == 0) out.add(t, middle);
    out.remove(f.id, for_id(f, join({uw, w1w})));
    out.remove(g.id, for_id(g, join({inverse_word(h), uw, w2w})));
  }
  out.log.push_back("mu f=" + word_text({f}) + " g=" + word_text({g}) + " h=" + word_text(h));
  return out;
}

std::optional<GenSet> eta(const GroupTower& t, const GenSet& y, SignedGen f, const GenWord& h) {
  auto fr = resolve_plus(t, y, f);
  auto hv = resolve_y0_word(t, y, h);
  if (!fr || !hv) return std::nullopt;
  Element hf = multiply(t, *hv, fr->value);
  Element u = com(t, fr->value, hf);
  int64_t lu = lambda_of(t, u);
  if (lu <= 0 || lu >= fr->weight) return std::nullopt;

  GenSet out = y;
  Element uinv = invert(t, u);
  Element f1 = multiply(t, uinv, fr->value);
  Element conj = multiply(t, multiply(t, uinv, *hv), u);
  out.gens.erase(std::remove_if(out.gens.begin(), out.gens.end(),
                                [&](const GenSet::Gen& x) { return x.id == f.id; }),
                 out.gens.end());
  GenWord f1w = out.add(t, f1);
  GenWord uw = out.add(t, u);
  out.add(t, conj);
  out.remove(f.id, for_id(f, join({uw, f1w})));
  out.log.push_back("eta f=" + word_text({f}) + " h=" + word_text(h));
  return out;
}

std::optional<GenSet> nu(const GroupTower& t, const GenSet& y, SignedGen f) {
  auto fr = resolve_plus(t, y, f);
  if (!fr || is_cyclically_reduced(t, fr->value)) return std::nullopt;
  CyclicSplit cs = cyclic_decompose(t, fr->value);
  GenSet out = y;
  out.gens.erase(std::remove_if(out.gens.begin(), out.gens.end(),
                                [&](const GenSet::Gen& x) { return x.id == f.id; }),
                 out.gens.end());
  GenWord cw = out.add(t, cs.conj);
  GenWord corew = out.add(t, cs.core);
  out.remove(f.id, for_id(f, join({inverse_word(cw), corew, cw})));
  out.log.push_back("nu f=" + word_text({f}));
  return out;
}

// ---- reduction --------------------------------------------------------------

namespace {

struct MuCandidate {
  SignedGen f, g;
  GenWord h;
};
struct EtaCandidate {
  SignedGen f;
  GenWord h;
};

// Positive-weight overlap between f and h*g: |f^-1 h g| drops below
// |f| + |g| in the top coordinate exactly when com(f, h*g) has positive weight.
bool overlaps(const GroupTower& t, const SignedValue& f, const Element& h, const SignedValue& g,
              int64_t* middle_weight = nullptr) {
  if (f.lead != g.lead) return false;
  Element m = multiply(t, multiply(t, f.inverse, h), g.value);
  int64_t w = lambda_of(t, m);
  if (middle_weight) *middle_weight = w;
  return w < f.weight + g.weight;
}

std::optional<MuCandidate> find_mu(const GroupTower& t, const std::vector<SignedValue>& plus,
                                   const std::vector<BallElement>& ball) {
  for (const auto& f : plus)
    for (const auto& g : plus) {
      if (f.gen == g.gen || f.lead != g.lead) continue;
      for (const auto& h : ball)
        if (overlaps(t, f, h.value, g)) return MuCandidate{f.gen, g.gen, h.word};
    }
  return std::nullopt;
}

std::optional<EtaCandidate> find_eta(const GroupTower& t, const std::vector<SignedValue>& plus,
                                     const std::vector<BallElement>& ball) {
  for (const auto& f : plus)
    for (const auto& h : ball) {
      int64_t m = 0;
      // com(f, h*f) has weight (2|f| - m)/2, strictly between 0 and |f|
      // exactly when 0 < m < 2|f|.
      if (overlaps(t, f, h.value, f, &m) && m > 0) return EtaCandidate{f.gen, h.word};
    }
  return std::nullopt;
}

std::vector<Element> y0_values(const GroupTower& t, const GenSet& y) {
  std::vector<Element> out;
  for (const auto& g : y.gens)
    if (!is_plus(t, g.value)) out.push_back(g.value);
  return out;
}

}  // namespace

ReduceResult reduce_genset(const GroupTower& t, const GenSet& input, const NielsenOptions& opt) {
  ReduceResult res;
  res.set = input;
  res.initial_weight = lambda_weight(t, input);
  const int64_t cap = std::max<int64_t>(res.initial_weight * res.initial_weight, 1) + 64;
  GenSet& y = res.set;
  for (int round = 0; round <= opt.augment_rounds; ++round) {
    while (res.steps < cap) {
      auto ball = y0_ball(t, y, opt);
      auto both = plus_values(t, y, true);
      if (auto c = find_mu(t, both, ball)) {
        y = *mu(t, y, c->f, c->g, c->h);
      } else {
        std::optional<GenSet> next;
        for (const auto& f : plus_values(t, y, false))
          if ((next = nu(t, y, f.gen))) break;
        if (!next) {
          if (auto e = find_eta(t, both, ball)) next = eta(t, y, e->f, e->h);
        }
        if (!next) break;
        y = std::move(*next);
      }
      ++res.steps;
    }
    if (round == opt.augment_rounds) break;
    // Closure: f^-1 h f of weight zero must lie in <Y0>.
    auto ball = y0_ball(t, y, opt);
    auto both = plus_values(t, y, true);
    bool added = false;
    for (const auto& f : both) {
      for (const auto& h : ball) {
        if (h.word.empty()) continue;
        int64_t m = 0;
        if (!overlaps(t, f, h.value, f, &m) || m != 0) continue;
        Element x = multiply(t, multiply(t, f.inverse, h.value), f.value);
        if (subgroup_contains(t, y0_values(t, y), x, opt.radius)) continue;
        y.add(t, x);
        y.log.push_back("close f=" + word_text({f.gen}) + " h=" + word_text(h.word));
        ++res.augmentations;
        added = true;
        break;
      }
      if (added) break;
    }
    if (!added) break;
  }
  return res;
}

std::vector<std::string> is_reduced(const GroupTower& t, const GenSet& y, const NielsenOptions& opt) {
  std::vector<std::string> out;
  auto ball = y0_ball(t, y, opt);
  auto both = plus_values(t, y, true);
  auto zero = y0_values(t, y);
  for (const auto& f : plus_values(t, y, false))
    if (!is_cyclically_reduced(t, f.value)) out.push_back("(a) not cyclically reduced: f=" + f.text);
  for (const auto& f : both)
    for (const auto& g : both) {
      if (f.gen == g.gen || f.lead != g.lead) continue;
      for (const auto& h : ball)
        if (overlaps(t, f, h.value, g)) {
          out.push_back("(b) f=" + f.text + " g=" + g.text + " h=" + h.text);
          break;
        }
    }
  for (const auto& f : both)
    for (const auto& h : ball) {
      int64_t m = 0;
      if (!overlaps(t, f, h.value, f, &m)) continue;
      if (m > 0) {
        out.push_back("(c) partial overlap: f=" + f.text + " h=" + h.text);
      } else if (!h.word.empty()) {
        Element x = multiply(t, multiply(t, f.inverse, h.value), f.value);
        if (!subgroup_contains(t, zero, x, opt.radius))
          out.push_back("(d) f^-1*h*f outside <Y0>: f=" + f.text + " h=" + h.text);
      }
    }
  return out;
}

bool subgroup_contains(const GroupTower& t, const std::vector<Element>& gens, const Element& x, int radius) {
  if (x.is_identity()) return true;
  bool base = x.level == 1;
  for (const auto& g : gens) base = base && g.level == 1;
  if (base) {
    std::vector<Word> words;
    for (const auto& g : gens) words.push_back(g.word);
    return FoldedGraph(words).accepts(x.word);
  }
  const size_t limit = NielsenOptions{}.ball_limit;
  std::vector<Element> steps;
  for (const auto& g : gens) {
    steps.push_back(g);
    steps.push_back(invert(t, g));
  }
  std::set<Element> seen{identity()};
  std::vector<Element> layer{identity()};
  for (int r = 0; r < radius && seen.size() < limit; ++r) {
    std::vector<Element> next;
    for (const auto& a : layer)
      for (const auto& s : steps) {
        Element b = multiply(t, a, s);
        if (seen.insert(b).second) next.push_back(b);
      }
    layer = std::move(next);
  }
  if (seen.count(x)) return true;
  int level = x.level;
  for (const auto& g : gens) level = std::max(level, g.level);
  for (const auto& s : standard_generators(t, level))
    if (!seen.count(s)) return false;
  return true;
}

}  // namespace znfree
