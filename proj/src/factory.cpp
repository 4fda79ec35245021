#include "znfree/factory.hpp"

#include <functional>
#include <set>

#include "znfree/hnn.hpp"
#include "znfree/io.hpp"

namespace znfree {

namespace {

std::vector<std::string> x_names(int from, int to) {
  std::vector<std::string> v;
  for (int i = from; i <= to; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

Element base_product(const std::vector<std::pair<int, int>>& letters) {
  Word w;
  for (auto [idx, sign] : letters) w.push_back(sign > 0 ? idx + 1 : -(idx + 1));
  return Element::from_word(free_reduce(w));
}

}  // namespace

GroupTower free_group(std::vector<std::string> alphabet) { return GroupTower(std::move(alphabet)); }

GroupTower surface_orientable(int genus) {
  if (genus < 1) throw DomainError("surface", "genus must be at least 1");
  const int m = 2 * genus - 1;  // x2..x2n are alphabet indices 0..m-1
  GroupTower t(x_names(2, 2 * genus));
  std::vector<std::pair<int, int>> up, down;
  for (int i = 0; i < m; ++i) up.push_back({i, 1});
  for (int i = m - 1; i >= 0; --i) down.push_back({i, 1});
  // x1^-1 (x2n...x2) x1 = x2...x2n
  return extend_hnn(t, {base_product(down)}, {base_product(up)}, "x1");
}

GroupTower surface_nonorientable(int n) {
  if (n < 3) throw DomainError("surface", "a non-orientable surface needs n >= 3");
  GroupTower t(x_names(2, n));
  const int m = n - 1;
  std::vector<std::pair<int, int>> u, v;
  for (int i = 0; i < m; ++i) u.push_back({i, 1});
  v.push_back({m - 1, -1});
  for (int i = m - 2; i >= 0; --i) v.push_back({i, 1});
  return extend_hnn(t, {base_product(v)}, {base_product(u)}, "x1");
}

GroupTower free_abelian(int n) {
  if (n < 1) throw DomainError("free-abelian", "rank must be at least 1");
  GroupTower t({"a"});
  std::vector<Element> axis{base_generator(0)};
  for (int k = 2; k <= n; ++k) {
    t = extend_hnn(t, axis, axis, "z" + std::to_string(k));
    axis.push_back(stable_generator(t, static_cast<int>(t.letters().size() - 1)));
  }
  return t;
}

GroupTower free_product(const GroupTower& left, const GroupTower& right) {
  std::set<std::string> used;
  for (const auto& a : left.alphabet()) used.insert(a);
  for (const auto& l : left.letters()) used.insert(l.name);
  auto fresh = [&](const std::string& name) {
    std::string n = name;
    for (int i = 2; used.count(n); ++i) n = name + "_" + std::to_string(i);
    used.insert(n);
    return n;
  };
  std::vector<std::string> alphabet = left.alphabet();
  for (const auto& a : right.alphabet()) alphabet.push_back(fresh(a));

  GroupTower out(alphabet);
  struct Factor {
    const GroupTower* tower;
    int shift;
    std::vector<int> ids;
  };
  Factor factors[2] = {{&left, 0, std::vector<int>(left.letters().size(), -1)},
                       {&right, static_cast<int>(left.alphabet().size()), std::vector<int>(right.letters().size(), -1)}};
  std::function<Element(const Factor&, const Element&)> translate = [&](const Factor& f, const Element& e) -> Element {
    if (e.level == 1) {
      Word w;
      for (Letter x : e.word) w.push_back(x > 0 ? x + f.shift : x - f.shift);
      return Element::from_word(w);
    }
    Element acc;
    for (size_t j = 0; j < e.pieces.size(); ++j) {
      acc = multiply(out, acc, translate(f, e.pieces[j]));
      if (j < e.blocks.size())
        acc = multiply(out, acc,
                       stable_generator(out, f.ids[static_cast<size_t>(e.blocks[j].letter)], e.blocks[j].sign));
    }
    return acc;
  };
  const int top = std::max(left.rank(), right.rank());
  for (int level = 2; level <= top; ++level) {
    for (int side = 0; side < 2; ++side) {
      Factor& f = factors[side];
      for (int id : f.tower->letters_at(level)) {
        const StableLetter& s = f.tower->letter(id);
        StableLetter c;
        c.name = side == 0 ? s.name : fresh(s.name);
        c.level = level;
        for (const auto& e : s.source) c.source.push_back(translate(f, e));
        for (const auto& e : s.target) c.target.push_back(translate(f, e));
        c.source_conjugator = translate(f, s.source_conjugator);
        c.target_conjugator = translate(f, s.target_conjugator);
        f.ids[static_cast<size_t>(id)] = out.add_letter(std::move(c));
      }
    }
  }
  check_tower(out);
  return out;
}

bool check_regular_basis(const std::vector<Word>& basis) {
  std::vector<Word> all;
  for (const auto& u : basis) {
    all.push_back(u);
    all.push_back(invert_word(u));
  }
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) continue;
      if (!all[i].empty() && !all[j].empty() && all[i].front() == all[j].front()) return false;
    }
  return true;
}

}  // namespace znfree
