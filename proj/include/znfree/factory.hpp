#pragma once
// Standard tower families.

#include <string>
#include <vector>

#include "znfree/tower.hpp"

namespace znfree {

GroupTower free_group(std::vector<std::string> alphabet);

// Closed orientable surface of genus n over F(x2..x2n) with stable letter x1
// and x1 (x2...x2n) x1^-1 = x2n...x2. Genus 1 gives Z^2.
GroupTower surface_orientable(int genus);

// Non-orientable surface with n >= 3 crosscaps, x1 (x2...xn) x1^-1 = xn^-1 x(n-1)...x2.
GroupTower surface_nonorientable(int n);

// Z^n: base F(a) and letters z2..zn, where zk commutes with a, z2..z(k-1).
GroupTower free_abelian(int n);

// Free product; names of the second factor that collide with the first get
// a numeric suffix.
GroupTower free_product(const GroupTower& left, const GroupTower& right);

// True iff distinct elements of U and U^-1 start with distinct letters.
bool check_regular_basis(const std::vector<Word>& basis);

}  // namespace znfree
