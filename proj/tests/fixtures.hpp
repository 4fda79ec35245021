#pragma once
#include <string>

#include "znfree/factory.hpp"
#include "znfree/hnn.hpp"
#include "znfree/io.hpp"
#include "znfree/tower.hpp"

namespace fixtures {

// F(a,b) with z^-1 a z = b.
inline znfree::GroupTower t1() {
  return znfree::parse_tower(R"({"alphabet":["a","b"],"levels":[[{"name":"z","source":["a"],"target":["b"]}]]})");
}

// F(a) with z commuting with a.
inline znfree::GroupTower t_ab() {
  return znfree::parse_tower(R"({"alphabet":["a"],"levels":[[{"name":"z","source":["a"],"target":["a"]}]]})");
}

inline znfree::GroupTower rank1(const std::string& letters = "ab") {
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  return znfree::GroupTower(names);
}

// T1 extended on a new level by w with w^-1 b w = b (stored as its unattached form).
inline znfree::GroupTower t2() {
  auto t = t1();
  return znfree::extend_hnn(t, {znfree::parse_element(t, "b")}, {znfree::parse_element(t, "b")}, "w");
}

inline znfree::Element el(const znfree::GroupTower& t, const std::string& s) { return znfree::parse_element(t, s); }

}  // namespace fixtures
