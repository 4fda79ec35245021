#pragma once
// Iterated HNN towers G_1 < G_2 < ... < G_n and their elements.
//
// G_1 is the free group on the alphabet. G_k is obtained from G_{k-1} by
// adjoining stable letters s, each with a graded free abelian source
// subgroup A = <c_1,...,c_m> and target B = <d_1,...,d_m> of G_{k-1} and the
// relations s^-1 c_i s = d_i. Elements are kept in HNN normal form with a
// canonical coset transversal, so equal elements have identical structure.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "znfree/errors.hpp"
#include "znfree/lambda.hpp"
#include "znfree/words.hpp"

namespace znfree {

struct Block {
  int letter = 0;  // index into GroupTower::letters()
  int sign = 1;    // +1 or -1
  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

class Element {
 public:
  int level = 1;
  Word word;                    // used when level == 1
  std::vector<Element> pieces;  // level >= 2: blocks.size()+1 lower-level pieces
  std::vector<Block> blocks;

  Element() = default;
  static Element from_word(Word w) {
    Element e;
    e.word = std::move(w);
    return e;
  }

  bool is_identity() const { return level == 1 && word.empty(); }
  int height() const { return is_identity() ? 0 : level; }
  size_t block_count() const { return level == 1 ? 0 : blocks.size(); }

  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);
};

struct StableLetter {
  std::string name;
  int level = 2;
  std::vector<Element> source;  // c_1..c_m, strictly increasing heights
  std::vector<Element> target;  // d_i = phi(c_i)
  // Conjugators applied by extend_hnn to reach an unattached presentation.
  Element source_conjugator;
  Element target_conjugator;
};

// Head and tail periods of a signed stable letter, and the length of one period.
struct LetterPeriods {
  Element head_pos, tail_pos, head_neg, tail_neg;
  LambdaVec period_length;
};

class GroupTower {
 public:
  GroupTower() = default;
  explicit GroupTower(std::vector<std::string> alphabet);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int rank() const { return rank_; }
  const std::vector<StableLetter>& letters() const { return letters_; }
  const StableLetter& letter(int id) const { return letters_.at(static_cast<size_t>(id)); }
  std::vector<int> letters_at(int level) const;

  // Looks up a name among alphabet letters and stable letters.
  // Returns the generator element and whether the name was found.
  std::optional<Element> symbol(const std::string& name) const;
  bool has_name(const std::string& name) const;

  // Appends a stable letter at level rank() or rank()+1 without validation.
  // The letter's generators must already live in lower levels.
  int add_letter(StableLetter letter);

  // Copy restricted to levels <= r.
  GroupTower truncated(int r) const;

  const LetterPeriods& periods(int id) const { return periods_.at(static_cast<size_t>(id)); }
  const Element& head(const Block& b) const {
    const auto& p = periods(b.letter);
    return b.sign > 0 ? p.head_pos : p.head_neg;
  }
  const Element& tail(const Block& b) const {
    const auto& p = periods(b.letter);
    return b.sign > 0 ? p.tail_pos : p.tail_neg;
  }

 private:
  std::vector<std::string> alphabet_;
  int rank_ = 1;
  std::vector<StableLetter> letters_;
  std::vector<LetterPeriods> periods_;
};

// ---- construction -------------------------------------------------------

Element identity();
Element base_generator(int index, int sign = 1);
Element stable_generator(const GroupTower& t, int letter, int sign = 1);

// ---- group operations ---------------------------------------------------

Element multiply(const GroupTower& t, const Element& g, const Element& h);
Element multiply(const GroupTower& t, std::initializer_list<const Element*> factors);
Element invert(const GroupTower& t, const Element& g);
Element power(const GroupTower& t, const Element& g, int64_t k);
Element conjugate_by(const GroupTower& t, const Element& g, const Element& x);  // x^-1 g x
bool equals(const GroupTower& t, const Element& g, const Element& h);
bool commutes(const GroupTower& t, const Element& g, const Element& h);

// ---- lengths ------------------------------------------------------------

LambdaVec length(const GroupTower& t, const Element& g);
int64_t lambda_of(const GroupTower& t, const Element& g);
inline int height(const Element& g) { return g.height(); }

// Doubled Gromov product |g| + |f| - |g^-1 f|.
LambdaVec gromov_doubled(const GroupTower& t, const Element& g, const Element& f);
// Throws DomainError("L4", ...) if the doubled product is not even.
LambdaVec gromov(const GroupTower& t, const Element& g, const Element& f);

// Circle decomposition g = x_0 o B_0 o x_1 o ... o B_{m-1} o x_m where each
// B_j = head^-K_j * s * tail^-K_{j+1} is a trimmed block.
struct CircleDecomposition {
  std::vector<Element> pieces;
  std::vector<Block> blocks;
  std::vector<int64_t> offsets;  // K_j per junction, size pieces.size()
  std::vector<LambdaVec> piece_lengths;
  std::vector<LambdaVec> block_lengths;
};
CircleDecomposition circle_decompose(const GroupTower& t, const Element& g);
Element block_value(const GroupTower& t, const CircleDecomposition& d, size_t j);

// Initial segment of g of length l; throws DomainError("prefix", ...) when no
// initial segment of that length exists.
Element prefix(const GroupTower& t, const Element& g, const LambdaVec& l);
Element com(const GroupTower& t, const Element& g, const Element& h);

bool is_cyclically_reduced(const GroupTower& t, const Element& g);
// g = conj^-1 * core * conj with core cyclically reduced.
struct CyclicSplit {
  Element conj;
  Element core;
};
CyclicSplit cyclic_decompose(const GroupTower& t, const Element& g);

// Smallest root r with g = r^k for cyclically reduced g.
Element root(const GroupTower& t, const Element& g, int64_t* exponent = nullptr);
bool is_proper_power(const GroupTower& t, const Element& g);

// Strips p^{+-1} from the left (or right) while the length drops by |p|.
// Returns the remainder and the signed number of stripped copies.
std::pair<Element, int64_t> strip_periodic(const GroupTower& t, const Element& g,
                                           const Element& p, bool from_left = true);

// ---- abelian subgroups --------------------------------------------------

// g = rep * prod gens[i]^exps[i] with rep a canonical representative of the
// coset g<gens>. gens must be graded (strictly increasing heights).
struct CosetSplit {
  Element rep;
  std::vector<int64_t> exps;
};
CosetSplit canon_coset(const GroupTower& t, const Element& g, const std::vector<Element>& gens);
std::optional<std::vector<int64_t>> abelian_membership(const GroupTower& t, const Element& g,
                                                       const std::vector<Element>& gens);
Element abelian_product(const GroupTower& t, const std::vector<Element>& gens,
                        const std::vector<int64_t>& exps);
// phi_s on the source of letter s; inverse maps the target back.
Element apply_phi(const GroupTower& t, int letter, const Element& a, bool inverse = false);

// ---- conjugacy and centralizers ----------------------------------------

// Finds x with x^-1 g x = h. Exact on the base level; bounded search above.
std::optional<Element> find_conjugator(const GroupTower& t, const Element& g, const Element& h);
bool are_conjugate(const GroupTower& t, const Element& g, const Element& h);

struct Centralizer {
  std::vector<Element> generators;  // generators of C(g), increasing heights
  Element conjugator;               // g = conjugator^-1 * core * conjugator
};
Centralizer centralizer(const GroupTower& t, const Element& g);

}  // namespace znfree
