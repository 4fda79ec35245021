#pragma once
// Elementary transformations of symmetric generating sets and the reduction
// loop that produces a reduced generating set.
//
// A GenSet stores one representative per inverse pair. Every generator has a
// numeric id; when a generator is removed its expression over the ids that
// replaced it is kept, so any original generator can be rewritten over the
// final set.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "znfree/tower.hpp"

namespace znfree {

struct SignedGen {
  int id = 0;
  int sign = 1;
  friend bool operator==(const SignedGen&, const SignedGen&) = default;
};
using GenWord = std::vector<SignedGen>;

struct GenSet {
  struct Gen {
    int id;
    Element value;
  };
  std::vector<Gen> gens;
  std::map<int, GenWord> expansions;  // removed id -> expression over later ids
  std::vector<GenWord> originals;     // each input generator over ids
  std::vector<std::string> log;
  int next_id = 0;

  const Element* find(int id) const;
  // Adds x unless it (or its inverse) is present; returns the signed id.
  // The identity yields an empty word.
  GenWord add(const GroupTower& t, const Element& x);
  void remove(int id, GenWord expression);
};

GenSet make_genset(const GroupTower& t, const std::vector<Element>& elements);
int64_t lambda_weight(const GroupTower& t, const GenSet& y);
Element evaluate(const GroupTower& t, const GenSet& y, const GenWord& w);
// Rewrites w until it only uses current generator ids.
GenWord expand(const GenSet& y, const GenWord& w);

struct NielsenOptions {
  int radius = 3;              // word radius of the <Y0> ball searched for h
  size_t ball_limit = 4000;    // maximum number of distinct ball elements
  int augment_rounds = 8;      // rounds of closure augmentation
};

// Elements of <Y0> as words of length <= radius over the Y0 generators,
// deduplicated by value and sorted by rendering.
struct BallElement {
  Element value;
  GenWord word;
  std::string text;
};
std::vector<BallElement> y0_ball(const GroupTower& t, const GenSet& y, const NielsenOptions& opt);

// Transformations; std::nullopt when the preconditions fail.
std::optional<GenSet> mu(const GroupTower& t, const GenSet& y, SignedGen f, SignedGen g, const GenWord& h);
std::optional<GenSet> eta(const GroupTower& t, const GenSet& y, SignedGen f, const GenWord& h);
std::optional<GenSet> nu(const GroupTower& t, const GenSet& y, SignedGen f);

struct ReduceResult {
  GenSet set;
  int steps = 0;          // mu/eta/nu applications
  int augmentations = 0;  // closure elements added to Y0
  int64_t initial_weight = 0;
};
ReduceResult reduce_genset(const GroupTower& t, const GenSet& y, const NielsenOptions& opt = {});

// Violations of conditions (a)-(d), h ranging over the <Y0> ball.
std::vector<std::string> is_reduced(const GroupTower& t, const GenSet& y, const NielsenOptions& opt = {});

// Membership of x in the subgroup generated by gens. Exact when the
// generators contain the standard generators of the level below x's top
// level or when everything lies in the base level; otherwise a bounded
// search over words of length <= radius.
bool subgroup_contains(const GroupTower& t, const std::vector<Element>& gens, const Element& x, int radius = 3);

}  // namespace znfree
