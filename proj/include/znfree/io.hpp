#pragma once
// Text forms of elements and towers.
//
// Element grammar:  word := term { ("*" | juxtaposition) term }
//                   term := atom [ "^" integer ]
//                   atom := name | "(" word ")" | "1"
// Rendering collapses runs of a letter into powers and joins factors with
// "*", so parse(render(g)) reproduces g exactly.

#include <string>

#include "znfree/tower.hpp"

namespace znfree {

Element parse_element(const GroupTower& t, const std::string& text);
std::string render(const GroupTower& t, const Element& g);

// JSON tower description:
//   {"alphabet": ["a","b"],
//    "levels": [[{"name":"z","source":["a"],"target":["b"]}], ...]}
// levels[i] holds the stable letters of level i+2. Letters may also carry
// "source_conjugator"/"target_conjugator" expressions recording how their
// subgroups were moved to unattached positions. Structure is checked here;
// the group-theoretic conditions are checked by validate_tower.
GroupTower parse_tower(const std::string& json_text);
GroupTower load_tower_file(const std::string& path);
std::string tower_to_json(const GroupTower& t, int indent = 2);

}  // namespace znfree
