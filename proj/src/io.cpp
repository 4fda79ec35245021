#include "znfree/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace znfree {

namespace {

class Parser {
 public:
  Parser(const GroupTower& t, const std::string& s) : t_(t), s_(s) {}

  Element run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Element e = word();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool starts_atom() const {
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == '1' || c == '_' || std::isalpha(static_cast<unsigned char>(c));
  }

  Element word() {
    Element acc = term();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
        acc = multiply(t_, acc, term());
      } else if (starts_atom()) {
        acc = multiply(t_, acc, term());
      } else {
        return acc;
      }
    }
  }

  Element term() {
    Element a = atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      size_t start = pos_;
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected integer exponent", pos_);
      int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s_[pos_] - '0', &v))
          throw ParseError("exponent overflow", start);
        ++pos_;
      }
      a = power(t_, a, neg ? -v : v);
    }
    return a;
  }

  Element atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      skip();
      Element e = word();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    if (c == '1') {
      ++pos_;
      return identity();
    }
    if (c == '_' || std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && (s_[pos_] == '_' || std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto e = t_.symbol(name);
      if (!e) throw ParseError("unknown generator '" + name + "'", start);
      return *e;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  const GroupTower& t_;
  const std::string& s_;
  size_t pos_ = 0;
};

void render_into(const GroupTower& t, const Element& g, std::vector<std::string>& out) {
  if (g.is_identity()) return;
  if (g.level == 1) {
    out.push_back(render_word(g.word, t.alphabet()));
    return;
  }
  size_t j = 0;
  render_into(t, g.pieces[0], out);
  while (j < g.blocks.size()) {
    size_t k = j + 1;
    while (k < g.blocks.size() && g.blocks[k] == g.blocks[j] && g.pieces[k].is_identity()) ++k;
    int64_t e = static_cast<int64_t>(k - j) * g.blocks[j].sign;
    std::string s = t.letter(g.blocks[j].letter).name;
    if (e != 1) s += "^" + std::to_string(e);
    out.push_back(s);
    render_into(t, g.pieces[k], out);
    j = k;
  }
}

bool valid_name(const std::string& n) {
  if (n.empty() || !(n[0] == '_' || std::isalpha(static_cast<unsigned char>(n[0])))) return false;
  for (char c : n)
    if (!(c == '_' || std::isalnum(static_cast<unsigned char>(c)))) return false;
  return true;
}

void check_keys(const nlohmann::json& j, const std::set<std::string>& required, const std::string& where,
                const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw ParseError(where + " must be an object", 0);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!required.count(it.key()) && !optional.count(it.key()))
      throw ParseError("unknown key '" + it.key() + "' in " + where, 0);
  for (const auto& k : required)
    if (!j.contains(k)) throw ParseError("missing key '" + k + "' in " + where, 0);
}

}  // namespace

Element parse_element(const GroupTower& t, const std::string& text) { return Parser(t, text).run(); }

std::string render(const GroupTower& t, const Element& g) {
  std::vector<std::string> parts;
  render_into(t, g, parts);
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

GroupTower parse_tower(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  check_keys(j, {"alphabet", "levels"}, "tower");
  if (!j["alphabet"].is_array() || j["alphabet"].empty()) throw ParseError("alphabet must be a non-empty array", 0);
  std::set<std::string> names;
  std::vector<std::string> alphabet;
  for (const auto& a : j["alphabet"]) {
    if (!a.is_string() || !valid_name(a.get<std::string>())) throw ParseError("invalid alphabet entry", 0);
    if (!names.insert(a.get<std::string>()).second) throw ParseError("duplicate name '" + a.get<std::string>() + "'", 0);
    alphabet.push_back(a.get<std::string>());
  }
  GroupTower t(alphabet);
  if (!j["levels"].is_array()) throw ParseError("levels must be an array", 0);
  int level = 2;
  for (const auto& lv : j["levels"]) {
    if (!lv.is_array() || lv.empty()) throw ParseError("each level must be a non-empty array", 0);
    GroupTower below = t;
    for (const auto& lj : lv) {
      check_keys(lj, {"name", "source", "target"}, "stable letter", {"source_conjugator", "target_conjugator"});
      if (!lj["name"].is_string() || !valid_name(lj["name"].get<std::string>()))
        throw ParseError("invalid stable letter name", 0);
      StableLetter s;
      s.name = lj["name"].get<std::string>();
      if (!names.insert(s.name).second) throw ParseError("duplicate name '" + s.name + "'", 0);
      s.level = level;
      for (const char* side : {"source", "target"}) {
        if (!lj[side].is_array()) throw ParseError(std::string(side) + " must be an array", 0);
        for (const auto& w : lj[side]) {
          if (!w.is_string()) throw ParseError("generator expressions must be strings", 0);
          Element e = parse_element(below, w.get<std::string>());
          (std::string(side) == "source" ? s.source : s.target).push_back(e);
        }
      }
      for (const char* key : {"source_conjugator", "target_conjugator"}) {
        if (!lj.contains(key)) continue;
        if (!lj[key].is_string()) throw ParseError(std::string(key) + " must be a string", 0);
        (std::string(key) == "source_conjugator" ? s.source_conjugator : s.target_conjugator) =
            parse_element(below, lj[key].get<std::string>());
      }
      t.add_letter(std::move(s));
    }
    ++level;
  }
  return t;
}

GroupTower load_tower_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tower file '" + path + "'", 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tower(ss.str());
}

std::string tower_to_json(const GroupTower& t, int indent) {
  nlohmann::json j;
  j["alphabet"] = t.alphabet();
  j["levels"] = nlohmann::json::array();
  for (int level = 2; level <= t.rank(); ++level) {
    nlohmann::json lv = nlohmann::json::array();
    for (int id : t.letters_at(level)) {
      const StableLetter& s = t.letter(id);
      nlohmann::json lj;
      lj["name"] = s.name;
      lj["source"] = nlohmann::json::array();
      lj["target"] = nlohmann::json::array();
      for (const auto& e : s.source) lj["source"].push_back(render(t, e));
      for (const auto& e : s.target) lj["target"].push_back(render(t, e));
      if (!s.source_conjugator.is_identity()) lj["source_conjugator"] = render(t, s.source_conjugator);
      if (!s.target_conjugator.is_identity()) lj["target_conjugator"] = render(t, s.target_conjugator);
      lv.push_back(lj);
    }
    j["levels"].push_back(lv);
  }
  return j.dump(indent);
}

}  // namespace znfree
