// Command-line front end for the znfree library.
//
// Exit status: 0 on success, 1 when the library rejects a request (the
// failed condition is printed), 2 for usage, parse and file errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "znfree/axioms.hpp"
#include "znfree/factory.hpp"
#include "znfree/hnn.hpp"
#include "znfree/io.hpp"
#include "znfree/nielsen.hpp"
#include "znfree/pregroup.hpp"

using namespace znfree;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupTower load_checked(const std::string& path) {
  GroupTower t = load_tower_file(path);
  check_tower(t);
  return t;
}

void emit_tower(const GroupTower& t, const std::string& out_path) {
  std::string text = tower_to_json(t) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

std::vector<Element> parse_all(const GroupTower& t, const std::vector<std::string>& exprs) {
  std::vector<Element> out;
  for (const auto& e : exprs) out.push_back(parse_element(t, e));
  return out;
}

std::vector<Element> standard_generators(const GroupTower& t) {
  std::vector<Element> out;
  for (size_t i = 0; i < t.alphabet().size(); ++i) out.push_back(base_generator(static_cast<int>(i)));
  for (size_t i = 0; i < t.letters().size(); ++i) out.push_back(stable_generator(t, static_cast<int>(i)));
  return out;
}

std::string gen_word_text(const GroupTower& t, const GenSet& y, const GenWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    const Element* v = y.find(w[i].id);
    std::string name = v ? "(" + render(t, *v) + ")" : "y" + std::to_string(w[i].id);
    out += (i ? " * " : "") + name + (w[i].sign < 0 ? "^-1" : "");
  }
  return out;
}

GenSet reduced_or_given(const GroupTower& t, const std::vector<std::string>& exprs, bool reduce) {
  std::vector<Element> gens = exprs.empty() ? standard_generators(t) : parse_all(t, exprs);
  GenSet y = make_genset(t, gens);
  return reduce ? reduce_genset(t, y).set : y;
}

void print_report(const AxiomReport& r) {
  std::cout << r.summary() << "\n";
  for (const auto& v : r.violations) std::cout << v << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in groups with free Z^n-valued length functions"};
  app.require_subcommand(1);

  std::string tower_path, out_path;
  std::vector<std::string> exprs;
  uint64_t seed = 0;
  int samples = 1000, radius = 4, word_cap = 10, number = 0;
  bool flag = false;
  int status = 0;
  auto tower_opt = [&](CLI::App* sub) { sub->add_option("-t,--tower", tower_path, "tower file (JSON)")->required(); };

  auto* eval = app.add_subcommand("eval", "normal form, length, height and top weight of an expression");
  tower_opt(eval);
  eval->add_option("expr", exprs, "expression")->required()->expected(1);
  eval->callback([&] {
    auto t = load_checked(tower_path);
    Element g = parse_element(t, exprs[0]);
    std::cout << "normal: " << render(t, g) << "\n"
              << "length: " << length(t, g).str() << "\n"
              << "height: " << g.height() << "\n"
              << "lambda: " << lambda_of(t, g) << "\n";
  });

  auto* eq = app.add_subcommand("eq", "decide equality of two expressions");
  tower_opt(eq);
  eq->add_option("exprs", exprs, "two expressions")->required()->expected(2);
  eq->callback([&] {
    auto t = load_checked(tower_path);
    std::cout << (equals(t, parse_element(t, exprs[0]), parse_element(t, exprs[1])) ? "true" : "false") << "\n";
  });

  auto* comc = app.add_subcommand("com", "longest common initial segment of two elements");
  tower_opt(comc);
  comc->add_option("exprs", exprs, "two expressions")->required()->expected(2);
  comc->callback([&] {
    auto t = load_checked(tower_path);
    Element g = parse_element(t, exprs[0]), f = parse_element(t, exprs[1]);
    Element c = com(t, g, f);
    std::cout << "com: " << render(t, c) << "\n"
              << "length: " << length(t, c).str() << "\n"
              << "gromov: " << gromov(t, g, f).str() << "\n";
  });

  auto* comm = app.add_subcommand("commutes", "decide whether two elements commute");
  tower_opt(comm);
  comm->add_option("exprs", exprs, "two expressions")->required()->expected(2);
  comm->callback([&] {
    auto t = load_checked(tower_path);
    std::cout << (commutes(t, parse_element(t, exprs[0]), parse_element(t, exprs[1])) ? "true" : "false") << "\n";
  });

  auto* cent = app.add_subcommand("centralizer", "generators of the centralizer of an element");
  tower_opt(cent);
  cent->add_option("expr", exprs, "expression")->required()->expected(1);
  cent->callback([&] {
    auto t = load_checked(tower_path);
    Centralizer c = centralizer(t, parse_element(t, exprs[0]));
    std::cout << "conjugator: " << render(t, c.conjugator) << "\n";
    for (const auto& g : c.generators) std::cout << "generator: " << render(t, g) << "\n";
  });

  auto* red = app.add_subcommand("reduce-gens", "reduce a generating set, printing witnesses");
  tower_opt(red);
  red->add_option("exprs", exprs, "generators")->required();
  red->callback([&] {
    auto t = load_checked(tower_path);
    auto inputs = parse_all(t, exprs);
    GenSet y = make_genset(t, inputs);
    ReduceResult r = reduce_genset(t, y);
    std::cout << "weight: " << r.initial_weight << " -> " << lambda_weight(t, r.set) << "\n"
              << "steps: " << r.steps << "\n"
              << "closure: " << r.augmentations << "\n";
    for (const auto& g : r.set.gens) std::cout << "generator: " << render(t, g.value) << "\n";
    for (size_t i = 0; i < inputs.size(); ++i)
      std::cout << "witness: " << exprs[i] << " = " << gen_word_text(t, r.set, expand(r.set, r.set.originals[i]))
                << "\n";
    for (const auto& l : r.set.log) std::cout << "log: " << l << "\n";
    for (const auto& v : is_reduced(t, r.set)) std::cout << "violation: " << v << "\n";
  });

  auto* split = app.add_subcommand("split-level", "split the top level along a reduced generating set");
  tower_opt(split);
  split->add_option("exprs", exprs, "generators of the whole group (default: reduced standard generators)");
  split->add_flag("--reduce", flag, "reduce the given generators first");
  split->add_option("-o,--output", out_path, "write the rebuilt tower here");
  split->callback([&] {
    auto t = load_checked(tower_path);
    GenSet z = reduced_or_given(t, exprs, flag || exprs.empty());
    LevelSplit s = split_level(t, z);
    for (const auto& g : s.base_gens) std::cerr << "base: " << render(t, g) << "\n";
    for (const auto& l : s.letters) std::cerr << "letter: " << l.name << " = " << render(t, l.element) << "\n";
    emit_tower(rebuild_level(t, s), out_path);
  });

  std::vector<std::string> sources, targets;
  std::string name;
  auto* ext = app.add_subcommand("extend-hnn", "add a stable letter");
  tower_opt(ext);
  ext->add_option("--source", sources, "source generators, increasing height")->required();
  ext->add_option("--target", targets, "target generators, same order")->required();
  ext->add_option("--name", name, "name of the new letter")->required();
  ext->add_flag("--join", flag, "join the current top level instead of opening a new one");
  ext->add_option("-o,--output", out_path, "write the extended tower here");
  ext->callback([&] {
    auto t = load_checked(tower_path);
    emit_tower(extend_hnn(t, parse_all(t, sources), parse_all(t, targets), name, flag), out_path);
  });

  auto* ax = app.add_subcommand("check-axioms", "sampled check of the length axioms L1-L6");
  tower_opt(ax);
  ax->add_option("--samples", samples, "number of sampled triples");
  ax->add_option("--seed", seed, "random seed");
  ax->add_option("--radius", radius, "stable-letter budget per sample");
  ax->add_option("--word-cap", word_cap, "factor budget per sample");
  ax->add_flag("--lemmas", flag, "also run the commutation lemmas");
  ax->callback([&] {
    auto t = load_checked(tower_path);
    SampleSpec spec{seed, samples, radius, word_cap};
    AxiomReport r = check_axioms(t, spec);
    print_report(r);
    bool ok = r.ok();
    if (flag) {
      AxiomReport l = commutation_suite(t, spec);
      print_report(l);
      ok = ok && l.ok();
    }
    if (!ok) status = 1;
  });

  auto* vp = app.add_subcommand("verify-pregroup", "sampled checks of the pregroup of a generating set");
  tower_opt(vp);
  vp->add_option("exprs", exprs, "generating set (default: reduced standard generators)");
  vp->add_option("--samples", samples, "number of sampled sequences");
  vp->add_option("--seed", seed, "random seed");
  vp->callback([&] {
    auto t = load_checked(tower_path);
    GenSet z = reduced_or_given(t, exprs, exprs.empty());
    AxiomReport r = verify_pregroup(t, z, samples, seed);
    print_report(r);
    if (!r.ok()) status = 1;
  });

  auto* surf = app.add_subcommand("surface", "orientable surface group tower");
  surf->add_option("--genus", number, "genus")->required();
  surf->add_option("-o,--output", out_path, "output file");
  surf->callback([&] { emit_tower(surface_orientable(number), out_path); });

  auto* nonor = app.add_subcommand("nonorientable", "non-orientable surface group tower");
  nonor->add_option("-n,--crosscaps", number, "number of crosscaps (>= 3)")->required();
  nonor->add_option("-o,--output", out_path, "output file");
  nonor->callback([&] { emit_tower(surface_nonorientable(number), out_path); });

  auto* ab = app.add_subcommand("abelian", "free abelian group tower");
  ab->add_option("-n,--rank", number, "rank")->required();
  ab->add_option("-o,--output", out_path, "output file");
  ab->callback([&] { emit_tower(free_abelian(number), out_path); });

  std::string other_path;
  auto* fp = app.add_subcommand("free-product", "free product of two towers");
  fp->add_option("left", tower_path, "first tower file")->required();
  fp->add_option("right", other_path, "second tower file")->required();
  fp->add_option("-o,--output", out_path, "output file");
  fp->callback([&] { emit_tower(free_product(load_checked(tower_path), load_checked(other_path)), out_path); });

  auto* basis = app.add_subcommand("check-basis", "initial-letter test for a set of free words");
  basis->add_option("-t,--tower", tower_path, "tower supplying the alphabet (default: letters in the words)");
  basis->add_option("words", exprs, "words")->required();
  basis->callback([&] {
    GroupTower t;
    if (!tower_path.empty()) {
      t = load_checked(tower_path);
    } else {
      std::set<std::string> names;
      std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
      for (const auto& w : exprs)
        for (auto it = std::sregex_iterator(w.begin(), w.end(), ident); it != std::sregex_iterator(); ++it)
          names.insert(it->str());
      t = GroupTower(std::vector<std::string>(names.begin(), names.end()));
    }
    std::vector<Word> words;
    for (const auto& g : parse_all(t, exprs)) {
      if (g.level != 1) throw DomainError("check-basis", "words must lie in the base level");
      words.push_back(g.word);
    }
    std::cout << (check_regular_basis(words) ? "true" : "false") << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const StabilizationError& e) {
    std::cerr << "orientation-clash: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
