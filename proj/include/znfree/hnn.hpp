#pragma once
// Building and checking towers: admissibility of associated pairs, the
// orientation of stable letters, and extension by a new stable letter.

#include <string>
#include <vector>

#include "znfree/tower.hpp"

namespace znfree {

enum class Side { Right, Left };

struct Violation {
  std::string condition;
  std::string detail;
};

// Conditions on a pair (u, v) of top generators; empty string when admissible.
std::string admissibility_failure(const GroupTower& t, const Element& u, const Element& v);

// All violations of the tower conditions, in a deterministic order.
std::vector<Violation> validate_tower(const GroupTower& t);
// Throws DomainError for the first violation.
void check_tower(const GroupTower& t);

// Signed stable letters whose head period is c (Right) or c^-1 (Left).
std::vector<Block> find_attached(const GroupTower& t, const Element& c, Side side);

struct UnattachedResult {
  std::vector<Element> gens;  // conjugator^-1 * gens * conjugator
  Element top;                // conjugated top generator
  Element conjugator;
};
// Conjugates gens by stable letters of level <= max_level until the top
// generator c is no longer a head period on the given side. Throws
// DomainError("orientation-clash") when only higher letters consume it.
UnattachedResult unattached_conjugate(const GroupTower& t, const std::vector<Element>& gens,
                                      const Element& c, Side side, int max_level = 1 << 30);

// Adds a stable letter with relations s^-1 source[i] s = target[i]. The new
// letter sits on a new top level, or joins the current top level when
// join_top is set. Source and target are first conjugated to unattached
// positions; the conjugators are recorded on the stored letter.
// The element t = source_conjugator * s * target_conjugator^-1, which
// satisfies t^-1 c t = d on the subgroups as they were given to extend_hnn.
Element presented_letter(const GroupTower& t, int letter);

GroupTower extend_hnn(const GroupTower& t, const std::vector<Element>& source,
                      const std::vector<Element>& target, const std::string& name, bool join_top = false);

}  // namespace znfree
