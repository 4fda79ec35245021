#pragma once
// The pregroup P_Z = <Z0> Z+ <Z0>  u  <Z0> of a reduced generating set Z,
// reduced sequences over it, and the splitting of a level into an HNN
// presentation over <Z0>.

#include <optional>
#include <string>
#include <vector>

#include "znfree/axioms.hpp"
#include "znfree/nielsen.hpp"

namespace znfree {

struct PSequence {
  std::vector<Element> items;
};

// x = left * letter * right with left, right in <Z0>; letter is empty for
// elements of <Z0> (then x = left).
struct PzShape {
  std::optional<Element> letter;
  Element left;
  Element right;
};

class PzContext {
 public:
  // Throws DomainError("reduced-set", ...) when require_reduced is set and
  // Z violates one of the reduction conditions.
  PzContext(const GroupTower& t, const GenSet& z, bool require_reduced = true);

  bool in_z0(const Element& x) const;
  std::optional<PzShape> shape(const Element& x) const;
  bool member(const Element& x) const { return shape(x).has_value(); }
  bool product_defined(const Element& x, const Element& y) const;
  PSequence reduce(const PSequence& seq) const;

  const GroupTower& tower() const { return *t_; }
  const std::vector<Element>& zero_gens() const { return zero_; }
  const std::vector<Element>& letters() const { return letters_; }  // Z+ and inverses

 private:
  const GroupTower* t_;
  std::vector<Element> zero_;
  std::vector<Element> letters_;
  bool zero_is_lower_level_ = false;
};

bool pz_membership(const GroupTower& t, const GenSet& z, const Element& x);
bool pz_product_defined(const GroupTower& t, const GenSet& z, const Element& x, const Element& y);
PSequence reduce_psequence(const GroupTower& t, const GenSet& z, const PSequence& seq);
Element psequence_product(const GroupTower& t, const PSequence& seq);

// Random element of P_Z built as g * f * h from short words in Z0.
Element sample_pz_item(const PzContext& ctx, std::mt19937_64& rng, bool allow_zero = true);

// Inverse closure, equal lengths of reduced refactorizations, and additivity
// of weights along reduced sequences, on seeded random sequences. Does not
// require Z to be reduced, so corrupted sets show up as violations.
AxiomReport verify_pregroup(const GroupTower& t, const GenSet& z, int sample_size, uint64_t seed = 0);

struct SplitLetter {
  std::string name;
  Element generator;            // the member of Z+ behind this letter
  Element twist;                // element = generator * twist with twist in H
  Element element;              // the stable letter itself
  std::vector<Element> source;  // generators of {h in H : element^-1 h element in H}
  std::vector<Element> target;  // element^-1 * source[i] * element
};

struct LevelSplit {
  int level = 1;
  std::vector<Element> base_gens;
  std::vector<SplitLetter> letters;
};

// Splits the top level of t along a reduced generating set Z of the whole
// group: H = <Z0> must be the level below. When the two associated subgroups
// of a letter are conjugate in H, the letter is multiplied by the conjugator
// so both sides coincide, as the tower conditions require.
LevelSplit split_level(const GroupTower& t, const GenSet& z);

// Tower for the split: the levels below the split level extended by one
// stable letter per split letter, all on the split level.
GroupTower rebuild_level(const GroupTower& t, const LevelSplit& split);

// Reduces the standard generators of t, splits the top level, rebuilds it and
// checks that every original relation holds in the rebuilt tower under the
// map sending Z0 to itself and each split letter to its new stable letter.
std::vector<std::string> split_roundtrip_failures(const GroupTower& t);

}  // namespace znfree
