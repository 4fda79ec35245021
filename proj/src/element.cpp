#include <algorithm>

#include "znfree/tower.hpp"

namespace znfree {

bool operator==(const Element& a, const Element& b) {
  if (a.level != b.level) return false;
  if (a.level == 1) return a.word == b.word;
  return a.blocks == b.blocks && a.pieces == b.pieces;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.level != b.level) return a.level <=> b.level;
  if (a.level == 1) {
    if (a.word.size() != b.word.size()) return a.word.size() <=> b.word.size();
    return a.word <=> b.word;
  }
  if (a.blocks.size() != b.blocks.size()) return a.blocks.size() <=> b.blocks.size();
  if (auto c = a.blocks <=> b.blocks; c != 0) return c;
  for (size_t i = 0; i < a.pieces.size(); ++i)
    if (auto c = a.pieces[i] <=> b.pieces[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

GroupTower::GroupTower(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {}

std::vector<int> GroupTower::letters_at(int level) const {
  std::vector<int> ids;
  for (size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].level == level) ids.push_back(static_cast<int>(i));
  return ids;
}

std::optional<Element> GroupTower::symbol(const std::string& name) const {
  for (size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == name) return base_generator(static_cast<int>(i));
  for (size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].name == name) return stable_generator(*this, static_cast<int>(i));
  return std::nullopt;
}

bool GroupTower::has_name(const std::string& name) const { return symbol(name).has_value(); }

int GroupTower::add_letter(StableLetter letter) {
  if (letter.level < 2 || letter.level < rank_ || letter.level > rank_ + 1)
    throw std::invalid_argument("stable letter level must be the top level or the next one");
  if (letter.source.empty() || letter.source.size() != letter.target.size())
    throw DomainError("graded-generators", "source and target need the same non-zero size");
  for (const auto& e : letter.source)
    if (e.height() >= letter.level) throw DomainError("graded-generators", "generator above the letter level");
  for (const auto& e : letter.target)
    if (e.height() >= letter.level) throw DomainError("graded-generators", "generator above the letter level");
  if (letter.level == rank_ + 1) {
    ++rank_;
    for (auto& p : periods_) p.period_length = p.period_length.padded(rank_);
  }
  LetterPeriods p;
  p.head_pos = letter.source.back();
  p.tail_pos = letter.target.back();
  p.head_neg = invert(*this, p.tail_pos);
  p.tail_neg = invert(*this, p.head_pos);
  p.period_length = length(*this, p.head_pos);
  letters_.push_back(std::move(letter));
  periods_.push_back(std::move(p));
  return static_cast<int>(letters_.size() - 1);
}

GroupTower GroupTower::truncated(int r) const {
  GroupTower t(alphabet_);
  for (const auto& l : letters_)
    if (l.level <= r) t.add_letter(l);
  return t;
}

Element identity() { return Element(); }

Element base_generator(int index, int sign) { return Element::from_word({sign > 0 ? index + 1 : -(index + 1)}); }

Element stable_generator(const GroupTower& t, int letter, int sign) {
  Element e;
  e.level = t.letter(letter).level;
  e.pieces = {Element(), Element()};
  e.blocks = {Block{letter, sign > 0 ? 1 : -1}};
  return e;
}

}  // namespace znfree
