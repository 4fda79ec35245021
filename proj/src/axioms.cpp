#include "znfree/axioms.hpp"

#include <sstream>

#include "znfree/io.hpp"

namespace znfree {

namespace {

void violation(const GroupTower& t, AxiomReport& r, const std::string& name, const Element& g, const Element& f,
               const std::string& detail) {
  r.violations.push_back(name + " g=" + render(t, g) + " f=" + render(t, f) + " detail=" + detail);
}

std::vector<Element> generators(const GroupTower& t) {
  std::vector<Element> gens;
  for (size_t i = 0; i < t.alphabet().size(); ++i) gens.push_back(base_generator(static_cast<int>(i)));
  for (size_t i = 0; i < t.letters().size(); ++i) gens.push_back(stable_generator(t, static_cast<int>(i)));
  return gens;
}

std::vector<Word> all_words(int letters, int max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int k = 1; k <= max_len; ++k) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int x = -letters; x <= letters; ++x) {
        if (x == 0 || (!w.empty() && w.back() == -x)) continue;
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

template <class F>
void guarded(const GroupTower& t, AxiomReport& r, const std::string& name, const Element& g, const Element& f,
             F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    violation(t, r, name, g, f, std::string("exception: ") + e.what());
  }
}

}  // namespace

std::string AxiomReport::summary() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, n] : checked) {
    os << (first ? "" : " ") << name << "=" << n;
    first = false;
  }
  os << (ok() ? " OK" : " FAILED (" + std::to_string(violations.size()) + " violations)");
  return os.str();
}

Element sample_element(const GroupTower& t, const SampleSpec& spec, std::mt19937_64& rng) {
  std::vector<Element> gens = generators(t);
  std::uniform_int_distribution<int> len(0, spec.word_cap);
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  int n = len(rng);
  int top = 0;
  Element g;
  for (int i = 0; i < n; ++i) {
    const Element& x = gens[pick(rng)];
    if (x.level == t.rank() && t.rank() > 1) {
      if (top >= spec.radius) continue;
      ++top;
    }
    g = multiply(t, g, rng() % 2 ? x : invert(t, x));
  }
  return g;
}

LambdaVec gromov_product(const GroupTower& t, const Element& g, const Element& f) { return gromov(t, g, f); }

void check_element_axioms(const GroupTower& t, const Element& g, AxiomReport& r) {
  const LambdaVec zero(t.rank());
  const Element one;
  guarded(t, r, "L1", g, one, [&] {
    ++r.checked["L1"];
    LambdaVec l = length(t, g);
    if (l < zero) violation(t, r, "L1", g, one, "negative length " + l.str());
    if (g.is_identity() != l.is_zero()) violation(t, r, "L1", g, one, "zero length iff identity fails");
  });
  guarded(t, r, "L2", g, one, [&] {
    ++r.checked["L2"];
    if (length(t, g) != length(t, invert(t, g))) violation(t, r, "L2", g, one, "|g^-1| != |g|");
  });
  guarded(t, r, "L5", g, one, [&] {
    ++r.checked["L5"];
    if (!g.is_identity() && !(length(t, multiply(t, g, g)) > length(t, g)))
      violation(t, r, "L5", g, one, "|g^2| <= |g|");
  });
}

void check_pair_axioms(const GroupTower& t, const Element& g, const Element& f, AxiomReport& r) {
  const LambdaVec zero(t.rank());
  LambdaVec c2;
  guarded(t, r, "L4", g, f, [&] {
    ++r.checked["L4"];
    c2 = gromov_doubled(t, g, f);
    LambdaVec half;
    if (!c2.halve(half)) violation(t, r, "L4", g, f, "2c(g,f)=" + c2.str() + " is odd");
    LambdaVec lg = length(t, g), lf = length(t, f);
    LambdaVec m = lg < lf ? lg : lf;
    if (c2 < zero || c2 > 2 * m) violation(t, r, "L4", g, f, "c(g,f) outside [0, min(|g|,|f|)]");
  });
  guarded(t, r, "L6", g, f, [&] {
    ++r.checked["L6"];
    LambdaVec c;
    if (!gromov_doubled(t, g, f).halve(c)) {
      violation(t, r, "L6", g, f, "c(g,f) has a half-integer coordinate");
      return;
    }
    Element u = com(t, g, f);
    if (length(t, u) != c) {
      violation(t, r, "L6", g, f, "|com|=" + length(t, u).str() + " != c(g,f)=" + c.str());
      return;
    }
    Element g1 = multiply(t, invert(t, u), g);
    Element f1 = multiply(t, invert(t, u), f);
    if (length(t, g) != c + length(t, g1)) violation(t, r, "L6", g, f, "g != com o g1");
    if (length(t, f) != c + length(t, f1)) violation(t, r, "L6", g, f, "f != com o f1");
  });
}

void check_triple_axioms(const GroupTower& t, const Element& g, const Element& f, const Element& h,
                         AxiomReport& r) {
  guarded(t, r, "L3", g, f, [&] {
    ++r.checked["L3"];
    LambdaVec gf = gromov_doubled(t, g, f);
    LambdaVec gh = gromov_doubled(t, g, h);
    LambdaVec fh = gromov_doubled(t, f, h);
    if (gf > gh && gh != fh)
      violation(t, r, "L3", g, f, "h=" + render(t, h) + " c(g,f)>c(g,h) but c(g,h)!=c(f,h)");
    if (length(t, multiply(t, g, f)) > length(t, g) + length(t, f))
      violation(t, r, "L3", g, f, "triangle inequality fails");
  });
}

AxiomReport check_axioms(const GroupTower& t, const SampleSpec& spec) {
  AxiomReport r;
  std::mt19937_64 rng(spec.seed);
  for (int i = 0; i < spec.count; ++i) {
    try {
      Element g = sample_element(t, spec, rng);
      Element f = sample_element(t, spec, rng);
      Element h = sample_element(t, spec, rng);
      // Bias a share of pairs towards long common prefixes.
      if (i % 3 == 1) f = multiply(t, g, f);
      if (i % 3 == 2) h = multiply(t, f, h);
      check_element_axioms(t, g, r);
      check_pair_axioms(t, g, f, r);
      check_triple_axioms(t, g, f, h, r);
    } catch (const std::exception& e) {
      r.violations.push_back(std::string("SAMPLE detail=exception while building samples: ") + e.what());
    }
  }
  return r;
}

AxiomReport check_axioms_exhaustive(const GroupTower& t, int pair_len, int triple_len) {
  if (t.rank() != 1) throw DomainError("exhaustive", "exhaustive enumeration needs a rank-1 tower");
  AxiomReport r;
  const int k = static_cast<int>(t.alphabet().size());
  std::vector<Element> elems;
  for (auto& w : all_words(k, pair_len)) elems.push_back(Element::from_word(w));
  for (const auto& g : elems) check_element_axioms(t, g, r);
  for (const auto& g : elems)
    for (const auto& f : elems) check_pair_axioms(t, g, f, r);
  std::vector<Element> small;
  for (auto& w : all_words(k, triple_len)) small.push_back(Element::from_word(w));
  for (const auto& g : small)
    for (const auto& f : small)
      for (const auto& h : small) check_triple_axioms(t, g, f, h, r);
  return r;
}

AxiomReport commutation_suite(const GroupTower& t, const SampleSpec& spec) {
  AxiomReport r;
  std::mt19937_64 rng(spec.seed);
  SampleSpec small = spec;
  small.word_cap = std::max(1, spec.word_cap / 2);
  const auto& letters = t.letters();
  auto pick_letter = [&]() -> int {
    return static_cast<int>(std::uniform_int_distribution<size_t>(0, letters.size() - 1)(rng));
  };
  auto random_in = [&](const std::vector<Element>& gens) {
    std::vector<int64_t> e(gens.size());
    for (auto& x : e) x = std::uniform_int_distribution<int64_t>(-2, 2)(rng);
    return abelian_product(t, gens, e);
  };
  for (int i = 0; i < spec.count; ++i) {
    try {
      // le:LS on powers of a common root and on unrelated cyclically reduced pairs.
      {
        Element p = cyclic_decompose(t, sample_element(t, small, rng)).core;
        Element f = i % 2 ? power(t, p, 1 + i % 3) : cyclic_decompose(t, sample_element(t, small, rng)).core;
        Element h = power(t, p, 1 + (i / 2) % 3);
        if (!f.is_identity() && !h.is_identity()) {
          guarded(t, r, "le:LS", f, h, [&] {
            for (int m = 1; m <= 3; ++m)
              for (int n = 1; n <= 3; ++n) {
                LambdaVec c2 = gromov_doubled(t, power(t, f, m), power(t, h, n));
                if (c2 >= 2 * (length(t, f) + length(t, h))) {
                  ++r.checked["le:LS"];
                  if (!commutes(t, f, h)) violation(t, r, "le:LS", f, h, "long overlap of powers but [f,h] != 1");
                  return;
                }
              }
          });
        }
      }
      // le:cycl on commuting pairs x^-1 a x, x^-1 b x.
      {
        Element g = sample_element(t, small, rng);
        if (!g.is_identity()) {
          guarded(t, r, "le:cycl", g, g, [&] {
            Centralizer c = centralizer(t, g);
            Element h = random_in(c.generators);
            if (h.is_identity()) return;
            ++r.checked["le:cycl"];
            CyclicSplit a = cyclic_decompose(t, g), b = cyclic_decompose(t, h);
            if (!commutes(t, g, h)) violation(t, r, "le:cycl", g, h, "centraliser element does not commute");
            if (a.conj != b.conj) violation(t, r, "le:cycl", g, h, "cyclic decompositions use different conjugators");
          });
        }
      }
      if (letters.empty()) continue;
      // le:0, le:1, le:2 with f built from a stable letter and h's from its source.
      const int id = pick_letter();
      const StableLetter& s = letters[static_cast<size_t>(id)];
      Element a_pre = random_in(s.source);
      Element f = multiply(t, a_pre, stable_generator(t, id));
      if (i % 4 == 3) f = multiply(t, f, sample_element(t, small, rng));
      {
        const Element& h = s.source.back();
        guarded(t, r, "le:0", f, h, [&] {
          if (f.height() <= h.height()) return;
          if (conjugate_by(t, h, f).height() >= f.height()) return;
          ++r.checked["le:0"];
          for (int n = 1; n <= 3; ++n) {
            LambdaVec target = length(t, f) - n * length(t, h);
            bool pos = length(t, multiply(t, power(t, h, -n), f)) == target;
            bool neg = length(t, multiply(t, power(t, h, n), f)) == target;
            if (!pos && !neg) violation(t, r, "le:0", f, h, "f does not start with h^" + std::to_string(n));
          }
        });
      }
      {
        Element h1 = i % 5 == 4 ? sample_element(t, small, rng) : random_in(s.source);
        Element h2 = random_in(s.source);
        guarded(t, r, "le:1", h1, h2, [&] {
          const int hf = f.height();
          if (h1.height() >= hf || h2.height() >= hf) return;
          if (conjugate_by(t, h1, f).height() >= hf || conjugate_by(t, h2, f).height() >= hf) return;
          ++r.checked["le:1"];
          if (!commutes(t, h1, h2)) violation(t, r, "le:1", h1, h2, "f=" + render(t, f) + " [h1,h2] != 1");
        });
      }
      {
        Element fc = cyclic_decompose(t, f).core;
        Element h1 = random_in(s.source);
        guarded(t, r, "le:2", fc, h1, [&] {
          const int hf = fc.height();
          if (h1.is_identity() || h1.height() >= hf || conjugate_by(t, h1, fc).height() >= hf) return;
          Centralizer c = centralizer(t, h1);
          Element h2 = random_in(c.generators);
          if (h2.height() >= hf) return;
          ++r.checked["le:2"];
          if (conjugate_by(t, h2, fc).height() >= hf)
            violation(t, r, "le:2", fc, h1, "h2=" + render(t, h2) + " conjugate does not drop height");
        });
      }
    } catch (const std::exception& e) {
      r.violations.push_back(std::string("SAMPLE detail=exception while building samples: ") + e.what());
    }
  }
  return r;
}

}  // namespace znfree
