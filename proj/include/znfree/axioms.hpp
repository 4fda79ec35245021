#pragma once
// Verification harness for the length-function axioms L1-L6 and the
// commutation lemmas, run over seeded samples of a tower.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "znfree/tower.hpp"

namespace znfree {

struct SampleSpec {
  uint64_t seed = 0;
  int count = 1000;   // number of sampled triples
  int radius = 4;     // maximum number of top-level stable letters per factor word
  int word_cap = 10;  // maximum number of generator factors per sample
};

struct AxiomReport {
  std::map<std::string, int64_t> checked;  // instances examined per axiom or lemma
  std::vector<std::string> violations;     // "NAME g=<expr> f=<expr> detail=<...>"
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Random product of generators and their inverses using at most spec.radius
// top-level stable letters and at most spec.word_cap factors.
Element sample_element(const GroupTower& t, const SampleSpec& spec, std::mt19937_64& rng);

LambdaVec gromov_product(const GroupTower& t, const Element& g, const Element& f);

// Axioms on a single element, a pair and a triple; violations are appended.
void check_element_axioms(const GroupTower& t, const Element& g, AxiomReport& r);
void check_pair_axioms(const GroupTower& t, const Element& g, const Element& f, AxiomReport& r);
void check_triple_axioms(const GroupTower& t, const Element& g, const Element& f, const Element& h,
                         AxiomReport& r);

AxiomReport check_axioms(const GroupTower& t, const SampleSpec& spec);

// Rank-1 towers only: every reduced word up to pair_len for the element and
// pair axioms, and up to triple_len for L3.
AxiomReport check_axioms_exhaustive(const GroupTower& t, int pair_len, int triple_len);

// Structured instances of the commutation lemmas (hypothesis -> conclusion).
AxiomReport commutation_suite(const GroupTower& t, const SampleSpec& spec);

}  // namespace znfree
