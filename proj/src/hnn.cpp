#include "znfree/hnn.hpp"

#include <algorithm>
#include <set>

#include "znfree/io.hpp"

namespace znfree {

namespace {

struct SignedHead {
  Block block;
  Element head;
};

std::vector<SignedHead> all_heads(const GroupTower& t) {
  std::vector<SignedHead> out;
  for (size_t i = 0; i < t.letters().size(); ++i)
    for (int sign : {1, -1}) {
      Block b{static_cast<int>(i), sign};
      out.push_back({b, t.head(b)});
    }
  return out;
}

std::string signed_name(const GroupTower& t, const Block& b) {
  return t.letter(b.letter).name + (b.sign > 0 ? "" : "^-1");
}

bool same_subgroup(const GroupTower& t, const std::vector<Element>& x, const std::vector<Element>& y) {
  for (const auto& e : x)
    if (!abelian_membership(t, e, y)) return false;
  for (const auto& e : y)
    if (!abelian_membership(t, e, x)) return false;
  return true;
}

void check_side(const GroupTower& t, const StableLetter& s, const std::vector<Element>& gens,
                const char* side, std::vector<Violation>& out) {
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_identity()) {
      out.push_back({"graded-generators", s.name + " " + side + " contains the identity"});
      return;
    }
    if (i > 0 && gens[i].height() <= gens[i - 1].height())
      out.push_back({"graded-generators", s.name + " " + side + " heights are not strictly increasing"});
    if (i + 1 < gens.size() && !is_cyclically_reduced(t, gens[i]))
      out.push_back({"cyclically-reduced", s.name + " " + side + " generator " + render(t, gens[i])});
    for (size_t j = 0; j < i; ++j)
      if (!commutes(t, gens[i], gens[j]))
        out.push_back({"abelian-generators", s.name + " " + side + " generators do not commute"});
  }
}

}  // namespace

std::string admissibility_failure(const GroupTower& t, const Element& u, const Element& v) {
  if (!is_cyclically_reduced(t, u) || !is_cyclically_reduced(t, v)) return "admissible-pair: not-cyclically-reduced";
  if (is_proper_power(t, u) || is_proper_power(t, v)) return "admissible-pair: proper-power";
  if (length(t, u) != length(t, v)) return "admissible-pair: length-mismatch";
  if (are_conjugate(t, u, invert(t, v))) return "admissible-pair: conjugate-to-inverse";
  return "";
}

std::vector<Violation> validate_tower(const GroupTower& t) {
  std::vector<Violation> out;
  for (const auto& s : t.letters()) {
    if (s.source.size() != s.target.size() || s.source.empty()) {
      out.push_back({"graded-generators", s.name + " source and target sizes differ"});
      continue;
    }
    size_t before = out.size();
    check_side(t, s, s.source, "source", out);
    check_side(t, s, s.target, "target", out);
    for (size_t i = 0; i < s.source.size(); ++i)
      if (s.source[i].height() != s.target[i].height() || s.source[i].height() >= s.level)
        out.push_back({"graded-generators", s.name + " generator heights do not match"});
    if (s.source_conjugator.height() >= s.level || s.target_conjugator.height() >= s.level)
      out.push_back({"graded-generators", s.name + " conjugator lies above the level below the letter"});
    if (out.size() != before) continue;
    for (size_t i = 0; i < s.source.size(); ++i) {
      if (length(t, s.source[i]) != length(t, s.target[i])) {
        out.push_back({"length-preservation", s.name + ": |" + render(t, s.target[i]) + "| != |" +
                                                  render(t, s.source[i]) + "|"});
        continue;
      }
      for (size_t j = 0; j < i; ++j)
        for (int e : {1, -1}) {
          Element a = multiply(t, s.source[i], power(t, s.source[j], e));
          Element b = multiply(t, s.target[i], power(t, s.target[j], e));
          if (length(t, a) != length(t, b))
            out.push_back({"length-preservation", s.name + ": products of generators change length"});
        }
    }
    GroupTower below = t.truncated(s.level - 1);
    std::string adm = admissibility_failure(below, s.source.back(), s.target.back());
    if (!adm.empty()) out.push_back({adm, s.name});
  }
  // Orientation: head periods of distinct signed letters must differ, also
  // up to rotation on the base level.
  auto heads = all_heads(t);
  for (size_t i = 0; i < heads.size(); ++i)
    for (size_t j = i + 1; j < heads.size(); ++j) {
      const Element& x = heads[i].head;
      const Element& y = heads[j].head;
      bool clash = x == y || (x.level == 1 && y.level == 1 && is_rotation(x.word, y.word));
      if (clash)
        out.push_back({"orientation-clash", signed_name(t, heads[i].block) + " and " +
                                                signed_name(t, heads[j].block) + " share the head period " +
                                                render(t, x)});
    }
  // Associated subgroups of one level, taken in the presentation before the
  // move to unattached positions: equal or non-conjugate, at most twice.
  for (int level = 2; level <= t.rank(); ++level) {
    bool placed = true;
    for (int id : t.letters_at(level))
      placed = placed && t.letter(id).source_conjugator.height() < level && t.letter(id).target_conjugator.height() < level;
    if (!placed) continue;
    GroupTower below = t.truncated(level - 1);
    std::vector<std::vector<Element>> subs;
    for (int id : t.letters_at(level)) {
      const StableLetter& s = t.letter(id);
      const Element ca = invert(below, s.source_conjugator);
      const Element cb = invert(below, s.target_conjugator);
      std::vector<Element> src, dst;
      for (const auto& g : s.source) src.push_back(conjugate_by(below, g, ca));
      for (const auto& g : s.target) dst.push_back(conjugate_by(below, g, cb));
      subs.push_back(std::move(src));
      subs.push_back(std::move(dst));
    }
    for (size_t i = 0; i < subs.size(); ++i) {
      size_t copies = 1;
      for (size_t j = i + 1; j < subs.size(); ++j) {
        if (same_subgroup(below, subs[i], subs[j])) {
          ++copies;
          continue;
        }
        const Element& a = subs[i].back();
        const Element& b = subs[j].back();
        if (a.height() == b.height() && (are_conjugate(below, a, b) || are_conjugate(below, a, invert(below, b))))
          out.push_back({"centralizer-conjugacy", "conjugate associated subgroups " + render(t, a) + " and " +
                                                      render(t, b) + " differ"});
      }
      if (copies > 2)
        out.push_back({"centralizer-multiplicity",
                       "associated subgroup of " + render(t, subs[i].back()) + " used more than twice"});
    }
  }
  return out;
}

void check_tower(const GroupTower& t) {
  auto v = validate_tower(t);
  if (!v.empty()) throw DomainError(v.front().condition, v.front().detail);
}

std::vector<Block> find_attached(const GroupTower& t, const Element& c, Side side) {
  Element target = side == Side::Right ? c : invert(t, c);
  std::vector<Block> out;
  for (const auto& h : all_heads(t))
    if (h.head == target) out.push_back(h.block);
  return out;
}

UnattachedResult unattached_conjugate(const GroupTower& t, const std::vector<Element>& gens, const Element& c,
                                      Side side, int max_level) {
  UnattachedResult r{gens, c, identity()};
  auto conj_all = [&](const Element& w) {
    for (auto& g : r.gens) g = conjugate_by(t, g, w);
    r.top = conjugate_by(t, r.top, w);
    r.conjugator = multiply(t, r.conjugator, w);
  };
  // On the base level a rotation of a head period is moved onto it first.
  if (c.level == 1) {
    Element probe = side == Side::Right ? c : invert(t, c);
    for (const auto& h : all_heads(t)) {
      if (h.head.level != 1 || h.head == probe || !is_rotation(h.head.word, probe.word)) continue;
      Word y;
      words_conjugate(probe.word, h.head.word, &y);
      conj_all(Element::from_word(y));
      break;
    }
  }
  std::set<Element> visited;
  for (;;) {
    if (!visited.insert(r.top).second) throw DomainError("orientation-clash", "attachment cycle");
    auto att = find_attached(t, r.top, side);
    if (att.empty()) return r;
    auto usable = std::find_if(att.begin(), att.end(), [&](const Block& b) { return t.letter(b.letter).level <= max_level; });
    if (usable == att.end())
      throw DomainError("orientation-clash", render(t, r.top) + " is already consumed in the same direction by " +
                                                 t.letter(att.front().letter).name + " on the same level");
    conj_all(stable_generator(t, usable->letter, usable->sign));
  }
}

Element presented_letter(const GroupTower& t, int letter) {
  const StableLetter& s = t.letter(letter);
  return multiply(t, multiply(t, s.source_conjugator, stable_generator(t, letter)), invert(t, s.target_conjugator));
}

GroupTower extend_hnn(const GroupTower& t, const std::vector<Element>& source, const std::vector<Element>& target,
                      const std::string& name, bool join_top) {
  int level = join_top ? t.rank() : t.rank() + 1;
  if (level < 2) throw DomainError("graded-generators", "the base level has no stable letters to join");
  if (t.has_name(name)) throw DomainError("name", "'" + name + "' already names a generator");
  if (source.empty() || source.size() != target.size())
    throw DomainError("graded-generators", "source and target need the same non-zero size");
  for (size_t i = 0; i < source.size(); ++i) {
    if (source[i].height() >= level || target[i].height() >= level)
      throw DomainError("graded-generators", "generator above the new level");
    if (length(t, source[i]) != length(t, target[i]))
      throw DomainError("length-preservation", "|" + render(t, target[i]) + "| != |" + render(t, source[i]) + "|");
  }
  std::string adm = admissibility_failure(t, source.back(), target.back());
  if (!adm.empty()) throw DomainError(adm, name);
  UnattachedResult a = unattached_conjugate(t, source, source.back(), Side::Right, level - 1);
  UnattachedResult b = unattached_conjugate(t, target, target.back(), Side::Left, level - 1);
  StableLetter s;
  s.name = name;
  s.level = level;
  s.source = a.gens;
  s.target = b.gens;
  s.source_conjugator = a.conjugator;
  s.target_conjugator = b.conjugator;
  GroupTower out = t;
  out.add_letter(std::move(s));
  check_tower(out);
  return out;
}

}  // namespace znfree
