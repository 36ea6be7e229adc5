#ifndef RAAGPRES_WORDS_HPP
#define RAAGPRES_WORDS_HPP

#include <map>
#include <string>
#include <vector>

#include "raagpres/flag_complex.hpp"

namespace raagpres {

/// A letter of a word in the ambient right-angled Artin group: a vertex
/// generator with a sign.
struct RaagLetter {
  int vertex;
  int sign;  // +1 or -1
  bool operator==(const RaagLetter&) const = default;
};
using RaagWord = std::vector<RaagLetter>;

RaagWord inverse(const RaagWord& w);
RaagWord concat(const RaagWord& a, const RaagWord& b);
long exponent_sum(const RaagWord& w);

/// Shortlex normal form for the graph group of `c`: free cancellation
/// through commuting letters, then the lexicographically least linearisation
/// of the dependence order. Idempotent; equality in the group is equality
/// of normal forms.
RaagWord normal_form(const RaagWord& w, const FlagComplex& c);
bool trivial_in_group(const RaagWord& w, const FlagComplex& c);
bool equal_in_group(const RaagWord& a, const RaagWord& b, const FlagComplex& c);

std::string raag_word_to_string(const RaagWord& w, const FlagComplex& c);

/// Word over the heights of an edge path in the level-n cover.
struct HeightedWord {
  RaagWord word;
  long start_height = 0;

  std::vector<long> heights() const;  // start + running exponent sums
  bool closed_at_level(int n) const { return exponent_sum(word) % n == 0; }
};

/// A letter of a word over a presentation's generator symbols.
struct SubLetter {
  std::string symbol;
  int sign;  // +1 or -1
  bool operator==(const SubLetter&) const = default;
};
using SubgroupWord = std::vector<SubLetter>;

SubgroupWord sub_inverse(const SubgroupWord& w);
SubgroupWord sub_concat(std::initializer_list<SubgroupWord> parts);
SubgroupWord sub_free_reduce(const SubgroupWord& w);
SubgroupWord sub_pow(const SubgroupWord& w, int e);
SubgroupWord commutator(const SubgroupWord& a, const SubgroupWord& b);

/// Serialisation with `^` exponents, e.g. "t5^2 t4^-1 lam".
std::string word_to_string(const SubgroupWord& w);
SubgroupWord word_from_string(const std::string& s);

std::string lambda_symbol();
std::string stable_symbol(const std::string& vertex_name);   // t<name>
std::string tau_symbol(const std::string& barycentre_name);  // tau_<name>
std::string theta_symbol(const std::string& top, const std::string& bottom);

struct TauInfo {
  int barycentre;  // ambient vertex index
  int attach;      // ambient vertex index
};

/// Everything needed to build, expand and rewrite words for one (complex, n)
/// run. `sigma1` is the 1-dimensional build complex; `ambient` the full
/// complex the subgroup lives in (the same object when there are no
/// 2-simplices). Vertex indices below refer to `ambient`.
struct BuildContext {
  const FlagComplex* sigma1 = nullptr;
  const FlagComplex* ambient = nullptr;
  int n = 1;

  std::vector<int> order;   // sigma1 vertices as ambient indices, build order
  std::vector<int> parent;  // by ambient index; -1 for root / non-sigma1
  std::vector<int> pos;     // by ambient index; -1 for non-sigma1 vertices

  std::map<std::string, TauInfo> taus;          // overlay stable letters
  std::map<std::string, SubgroupWord> tietze;   // defined generators

  int root() const { return order.front(); }
  bool in_sigma1(int ambient_vertex) const { return pos[ambient_vertex] >= 0; }
  /// S_k: predecessors of v adjacent to it in sigma1.
  std::vector<int> predecessor_neighbours(int v) const;
  /// Non-tree predecessors v_beta, ascending by position.
  std::vector<int> non_tree_predecessors(int v) const;
};

BuildContext make_build_context(const FlagComplex& sigma1,
                                const FlagComplex& ambient,
                                const OrderedTree& tree, int n);
BuildContext make_build_context(const FlagComplex& sigma1,
                                const OrderedTree& tree, int n);

/// theta^i(v, v'): the formal word along the unique tree path, one syllable
/// t_p^i per path vertex. Child-to-parent steps contribute t_child^i,
/// parent-to-child steps t_child^-i; it expands to a_v^i a_{v'}^-i.
SubgroupWord theta(const BuildContext& ctx, int v, int v_prime, int i);

/// Substitution homomorphism into the ambient group: t_k -> a_k a_parent^-1,
/// lambda -> a_root^n, tau -> b a_attach^-1, defined symbols recursively.
RaagWord expand(const SubgroupWord& w, const BuildContext& ctx);

/// Reidemeister-Schreier rewriting over the transversal {a_root^p}: returns
/// a word in {lambda, t_k} that expands to `w` in the ambient group.
/// Requires exponent_sum(w) divisible by n and letters inside sigma1.
SubgroupWord rewrite_to_subgroup_alphabet(const RaagWord& w, const BuildContext& ctx);

}  // namespace raagpres

#endif
