// End-to-end acceptance run. Prints one PASS or FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "znfree/axioms.hpp"
#include "znfree/factory.hpp"
#include "znfree/hnn.hpp"
#include "znfree/io.hpp"
#include "znfree/nielsen.hpp"
#include "znfree/pregroup.hpp"

using namespace znfree;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct NamedTower {
  std::string name;
  GroupTower tower;
};

std::vector<NamedTower> axiom_towers() {
  return {{"T1", fixtures::t1()},
          {"T_ab", fixtures::t_ab()},
          {"abelian3", free_abelian(3)},
          {"surface2", surface_orientable(2)},
          {"nonorientable3", surface_nonorientable(3)}};
}

std::vector<NamedTower> factory_towers() {
  return {{"free(a,b)", free_group({"a", "b"})},
          {"surface1", surface_orientable(1)},
          {"surface2", surface_orientable(2)},
          {"surface3", surface_orientable(3)},
          {"nonorientable3", surface_nonorientable(3)},
          {"nonorientable4", surface_nonorientable(4)},
          {"nonorientable5", surface_nonorientable(5)},
          {"abelian2", free_abelian(2)},
          {"abelian3", free_abelian(3)},
          {"abelian4", free_abelian(4)},
          {"surface2*abelian2", free_product(surface_orientable(2), free_abelian(2))},
          {"T1*T_ab", free_product(fixtures::t1(), fixtures::t_ab())}};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- free-group oracle conversion -------------------------------------------

Element from_oracle(const std::string& w) {
  Word out;
  for (char c : w) out.push_back(std::isupper(static_cast<unsigned char>(c)) ? -(c - 'A' + 1) : c - 'a' + 1);
  return Element::from_word(out);
}

std::string to_oracle(const Element& g) {
  std::string out;
  for (Letter x : g.word) out += x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1);
  return out;
}

Outcome free_group_oracle(std::string& stats) {
  Outcome o;
  GroupTower t({"a", "b"});
  int64_t pairs = 0;
  auto check = [&](const std::string& u, const std::string& v) {
    ++pairs;
    Element g = from_oracle(u), f = from_oracle(v);
    std::string product = oracle::mul(u, v);
    if (to_oracle(multiply(t, g, f)) != product) o.fail("multiply " + u + " * " + v);
    if (length(t, g) != LambdaVec{static_cast<int64_t>(u.size())}) o.fail("length " + u);
    if (to_oracle(com(t, g, f)) != oracle::common_prefix(u, v)) o.fail("com " + u + " , " + v);
  };
  auto words = oracle::all_reduced("ab", 6);
  for (const auto& u : words)
    for (const auto& v : words) check(u, v);
  std::mt19937_64 rng(0);
  for (int i = 0; i < 10000; ++i) {
    std::string u = oracle::random_reduced(rng, "ab", 30);
    std::string v = oracle::random_reduced(rng, "ab", 30);
    check(u, v);
  }
  stats = std::to_string(pairs) + " pairs";
  return o;
}

// ---- axioms -----------------------------------------------------------------

Outcome axiom_suite(std::string& stats) {
  Outcome o;
  int64_t total = 0;
  for (const auto& [name, t] : axiom_towers()) {
    AxiomReport r = check_axioms(t, SampleSpec{0, 5000, 4, 10});
    for (const auto& [axiom, n] : r.checked) total += n;
    if (!r.ok()) o.fail(name + ": " + r.violations.front());
    if (r.checked["L6"] < 5000) o.fail(name + ": L6 ran on fewer than 5000 samples");
  }
  stats = std::to_string(total) + " axiom instances";
  return o;
}

// ---- stable-letter relations -----------------------------------------------

Outcome conjugation_law(std::string& stats) {
  Outcome o;
  int n = 0;
  for (const auto& [name, t] : factory_towers()) {
    for (size_t id = 0; id < t.letters().size(); ++id) {
      const auto& letter = t.letter(static_cast<int>(id));
      Element z = stable_generator(t, static_cast<int>(id));
      for (size_t i = 0; i < letter.source.size(); ++i) {
        ++n;
        Element lhs = conjugate_by(t, letter.source[i], z);
        if (!equals(t, lhs, letter.target[i])) o.fail(name + " " + letter.name + " source " + std::to_string(i));
      }
    }
  }
  stats = std::to_string(n) + " relations";
  return o;
}

Outcome connecting_elements(std::string& stats) {
  Outcome o;
  int n = 0;
  std::vector<NamedTower> towers = factory_towers();
  towers.push_back({"T2", fixtures::t2()});
  for (const auto& [name, t] : towers) {
    for (size_t id = 0; id < t.letters().size(); ++id) {
      const auto& letter = t.letter(static_cast<int>(id));
      Element z = stable_generator(t, static_cast<int>(id));
      ++n;
      if (length(t, z) != LambdaVec::unit(t.rank(), letter.level - 1))
        o.fail(name + " " + letter.name + " has length " + length(t, z).str());
      for (size_t i = 0; i < letter.source.size(); ++i)
        if (!equals(t, multiply(t, letter.source[i], z), multiply(t, z, letter.target[i])))
          o.fail(name + " " + letter.name + " slide " + std::to_string(i));
    }
  }
  stats = std::to_string(n) + " stable letters";
  return o;
}

// ---- pregroup additivity ------------------------------------------------------

Outcome additivity(std::string& stats) {
  Outcome o;
  int64_t items = 0;
  for (const auto& [name, t] : axiom_towers()) {
    std::vector<Element> gens;
    for (size_t i = 0; i < t.alphabet().size(); ++i) gens.push_back(base_generator(static_cast<int>(i)));
    for (size_t i = 0; i < t.letters().size(); ++i) gens.push_back(stable_generator(t, static_cast<int>(i)));
    GenSet z = reduce_genset(t, make_genset(t, gens)).set;
    try {
      PzContext ctx(t, z);
      std::mt19937_64 rng(0);
      for (int i = 0; i < 1000; ++i) {
        PSequence seq;
        size_t len = 1 + rng() % 6;
        for (size_t k = 0; k < len; ++k) seq.items.push_back(sample_pz_item(ctx, rng));
        PSequence reduced = ctx.reduce(seq);
        for (size_t k = 0; k + 1 < reduced.items.size(); ++k)
          if (ctx.product_defined(reduced.items[k], reduced.items[k + 1])) o.fail(name + ": reduction left a defined product");
        int64_t sum = 0;
        for (const auto& x : reduced.items) sum += lambda_of(t, x);
        items += static_cast<int64_t>(reduced.items.size());
        Element product = psequence_product(t, reduced);
        if (!(product == psequence_product(t, seq))) o.fail(name + ": reduction changed the product");
        if (sum != lambda_of(t, product))
          o.fail(name + ": weights sum to " + std::to_string(sum) + " but the product has " +
                 std::to_string(lambda_of(t, product)));
      }
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
  }
  stats = "5000 sequences, " + std::to_string(items) + " reduced items";
  return o;
}

// ---- Nielsen reduction --------------------------------------------------------

Element random_product(const GroupTower& t, std::mt19937_64& rng, int max_top) {
  std::vector<Element> base, top;
  for (size_t i = 0; i < t.alphabet().size(); ++i) base.push_back(base_generator(static_cast<int>(i)));
  for (size_t i = 0; i < t.letters().size(); ++i) top.push_back(stable_generator(t, static_cast<int>(i)));
  int tops = static_cast<int>(rng() % static_cast<uint64_t>(max_top + 1));
  Element g;
  for (int k = 0; k <= tops; ++k) {
    int n = static_cast<int>(rng() % 4);
    for (int j = 0; j < n; ++j) {
      const Element& x = base[rng() % base.size()];
      g = multiply(t, g, rng() % 2 ? x : invert(t, x));
    }
    if (k < tops) {
      const Element& x = top[rng() % top.size()];
      g = multiply(t, g, rng() % 2 ? x : invert(t, x));
    }
  }
  return g;
}

Outcome nielsen(std::string& stats) {
  Outcome o;
  std::vector<NamedTower> towers{{"T1", fixtures::t1()}, {"surface2", surface_orientable(2)}};
  std::mt19937_64 rng(0);
  int max_steps = 0, sets = 0;
  for (const auto& [name, t] : towers) {
    for (int i = 0; i < 200; ++i) {
      int size = 2 + static_cast<int>(rng() % 5);
      std::vector<Element> originals;
      int64_t weight = 0;
      while (static_cast<int>(originals.size()) < size) {
        Element e = random_product(t, rng, 3);
        int64_t w = lambda_of(t, e);
        if (weight + w > 12) continue;
        weight += w;
        originals.push_back(e);
      }
      ++sets;
      GenSet y = make_genset(t, originals);
      int64_t w0 = lambda_weight(t, y);
      ReduceResult r = reduce_genset(t, y);
      max_steps = std::max(max_steps, r.steps);
      std::string tag = name + " set " + std::to_string(i);
      if (r.steps > w0 * w0) o.fail(tag + ": " + std::to_string(r.steps) + " steps for weight " + std::to_string(w0));
      auto violations = is_reduced(t, r.set);
      if (!violations.empty()) o.fail(tag + ": " + violations.front());
      for (size_t k = 0; k < originals.size(); ++k) {
        Element back = multiply(t, invert(t, originals[k]), evaluate(t, r.set, r.set.originals[k]));
        if (!back.is_identity()) o.fail(tag + ": witness for input " + std::to_string(k) + " does not cancel");
      }
    }
  }
  stats = std::to_string(sets) + " sets, at most " + std::to_string(max_steps) + " steps";
  return o;
}

// ---- builder rejections -------------------------------------------------------

Outcome rejections(std::string& stats) {
  Outcome o;
  struct Case {
    std::string label;
    GroupTower tower;
    std::string source, target;
    bool join;
    std::string expect;
  };
  std::vector<Case> cases{
      {"a -> a^-1 over F(a)", fixtures::rank1("a"), "a", "a^-1", false, "conjugate-to-inverse"},
      {"a -> b^2 over F(a,b)", fixtures::rank1("ab"), "a", "b^2", false, "length-preservation"},
      {"b^2 -> a over T1", fixtures::t1(), "b^2", "a", false, "length-preservation"},
      {"join a -> b on T1", fixtures::t1(), "a", "b", true, "orientation-clash"},
      {"join a -> a on T_ab", fixtures::t_ab(), "a", "a", true, "orientation-clash"},
  };
  for (const auto& c : cases) {
    try {
      extend_hnn(c.tower, {parse_element(c.tower, c.source)}, {parse_element(c.tower, c.target)}, "w", c.join);
      o.fail(c.label + " was accepted");
    } catch (const DomainError& e) {
      if (std::string(e.what()).find(c.expect) == std::string::npos)
        o.fail(c.label + " rejected with: " + e.what());
    }
  }
  stats = std::to_string(cases.size()) + " fixtures";
  return o;
}

// ---- normal-form uniqueness -----------------------------------------------------

std::vector<Element> random_factors(const GroupTower& t, std::mt19937_64& rng) {
  std::vector<Element> gens;
  for (size_t i = 0; i < t.alphabet().size(); ++i) gens.push_back(base_generator(static_cast<int>(i)));
  for (size_t i = 0; i < t.letters().size(); ++i) gens.push_back(stable_generator(t, static_cast<int>(i)));
  std::vector<Element> out;
  int n = 1 + static_cast<int>(rng() % 12);
  int tops = 0;
  while (static_cast<int>(out.size()) < n) {
    const Element& g = gens[rng() % gens.size()];
    if (g.level == t.rank() && t.rank() > 1 && ++tops > 4) continue;
    out.push_back(rng() % 2 ? g : invert(t, g));
  }
  return out;
}

// Multiplies the factors with a random bracketing.
Element random_fold(const GroupTower& t, const std::vector<Element>& f, size_t lo, size_t hi, std::mt19937_64& rng) {
  if (hi == lo) return Element();
  if (hi - lo == 1) return f[lo];
  size_t mid = lo + 1 + rng() % (hi - lo - 1);
  return multiply(t, random_fold(t, f, lo, mid, rng), random_fold(t, f, mid, hi, rng));
}

std::vector<Element> refactor(const GroupTower& t, std::vector<Element> f, std::mt19937_64& rng) {
  int edits = 1 + static_cast<int>(rng() % 3);
  for (int e = 0; e < edits; ++e) {
    if (!t.letters().empty() && rng() % 2) {
      // Pinch pair: z^-1 c z d^-1 or z d z^-1 c^-1 for a relation z^-1 c z = d.
      int id = static_cast<int>(rng() % t.letters().size());
      const auto& letter = t.letter(id);
      size_t i = rng() % letter.source.size();
      Element z = stable_generator(t, id), zi = invert(t, z);
      const Element& c = letter.source[i];
      const Element& d = letter.target[i];
      std::vector<Element> pinch = rng() % 2 ? std::vector<Element>{zi, c, z, invert(t, d)}
                                             : std::vector<Element>{z, d, zi, invert(t, c)};
      size_t at = rng() % (f.size() + 1);
      f.insert(f.begin() + static_cast<long>(at), pinch.begin(), pinch.end());
    } else if (!f.empty()) {
      size_t at = rng() % f.size();
      const Element x = f[at];
      int64_t k = static_cast<int64_t>(rng() % 7) - 3;
      // Slide a power of a relation across a stable letter, or split a power.
      bool slid = false;
      for (size_t id = 0; id < t.letters().size() && !slid; ++id) {
        Element z = stable_generator(t, static_cast<int>(id));
        if (!(x == z)) continue;
        const auto& letter = t.letter(static_cast<int>(id));
        size_t i = rng() % letter.source.size();
        f[at] = power(t, letter.source[i], k);
        f.insert(f.begin() + static_cast<long>(at) + 1, {z, power(t, letter.target[i], -k)});
        slid = true;
      }
      if (!slid) {
        f[at] = power(t, x, k);
        f.insert(f.begin() + static_cast<long>(at) + 1, power(t, x, 1 - k));
      }
    }
  }
  return f;
}

Outcome normal_forms(std::string& stats) {
  Outcome o;
  std::vector<NamedTower> towers = axiom_towers();
  towers.push_back({"T2", fixtures::t2()});
  int64_t n = 0;
  for (const auto& [name, t] : towers) {
    std::mt19937_64 rng(0);
    for (int i = 0; i < 1000; ++i) {
      auto factors = random_factors(t, rng);
      Element reference;
      for (const auto& x : factors) reference = multiply(t, reference, x);
      std::string text = render(t, reference);
      for (int r = 0; r < 3; ++r) {
        ++n;
        auto other = refactor(t, factors, rng);
        Element g = random_fold(t, other, 0, other.size(), rng);
        if (!(g == reference) || !equals(t, g, reference) || render(t, g) != text)
          o.fail(name + ": " + text + " renormalized as " + render(t, g));
      }
    }
  }
  stats = std::to_string(n) + " refactorizations over " + std::to_string(towers.size()) + " towers";
  return o;
}

// ---- surface relators ---------------------------------------------------------

Outcome surface_relators(std::string& stats) {
  Outcome o;
  auto s2 = surface_orientable(2);
  if (!parse_element(s2, "x1*(x2*x3*x4)*x1^-1*(x4*x3*x2)^-1").is_identity())
    o.fail("orientable genus 2 relator is not trivial");
  auto n3 = surface_nonorientable(3);
  if (!parse_element(n3, "x1*(x2*x3)*x1^-1*(x3^-1*x2)^-1").is_identity())
    o.fail("non-orientable n=3 relator is not trivial");
  stats = "2 relators";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double budget;  // seconds, 0 for none
    std::function<Outcome(std::string&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "free-group oracle equivalence", 10, free_group_oracle},
      {2, "length axioms on sampled towers", 60, axiom_suite},
      {3, "conjugation law for factory towers", 0, conjugation_law},
      {4, "slide relation and unit length of stable letters", 0, connecting_elements},
      {5, "weight additivity on reduced sequences", 0, additivity},
      {6, "Nielsen reduction bound and witnesses", 120, nielsen},
      {7, "extension builder rejections", 0, rejections},
      {8, "normal-form uniqueness under refactorization", 0, normal_forms},
      {9, "surface relators", 0, surface_relators},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string stats;
    auto start = Clock::now();
    Outcome out;
    try {
      out = c.run(stats);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double secs = seconds_since(start);
    if (c.budget > 0 && secs > c.budget) out.fail("took " + std::to_string(secs) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << stats
              << ", " << timing << ")";
    if (!out.pass) std::cout << " -- " << out.detail;
    std::cout << std::endl;
    failed += out.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
