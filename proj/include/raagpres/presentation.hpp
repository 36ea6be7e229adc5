#ifndef RAAGPRES_PRESENTATION_HPP
#define RAAGPRES_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "raagpres/flag_complex.hpp"
#include "raagpres/words.hpp"

namespace raagpres {

enum class GeneratorRole {
  Lambda,         // the level generator a_root^n
  TreeStable,     // t_k = a_k a_parent^-1
  SimplexStable,  // tau for an overlaid 2-simplex
  Tietze,         // defined generator (theta words etc.)
  DirectedEdge,   // Dicks-Leary generator
  Schreier,       // Reidemeister-Schreier generator
};

std::string role_name(GeneratorRole r);

struct Generator {
  std::string symbol;
  GeneratorRole role;
  std::string detail;  // vertex / simplex the role refers to, if any
};

struct RelationTag {
  enum class Kind {
    TreeCommutator,    // a = vertex k
    Family,            // a,b = edge (top, bottom); index = j in 0..n-1
    TauAction,         // a = simplex, b = base generator symbol
    Elimination,       // a = simplex, b,c = edge (top, bottom)
    TietzeDefinition,  // a = defined symbol
    DicksLeary,        // a = cycle description, index = exponent
    Schreier,          // a = edge description, index = transversal level
  };
  Kind kind;
  std::string a, b, c;
  int index = -1;

  std::string to_string() const;
  bool operator==(const RelationTag&) const = default;
};

struct Relator {
  SubgroupWord word;
  RelationTag tag;
};

class Presentation {
 public:
  Presentation() = default;

  void add_generator(Generator g);
  void add_relator(Relator r);

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Relator>& relators() const { return relators_; }
  bool has_generator(const std::string& symbol) const;
  const Generator& generator(const std::string& symbol) const;

  /// Remove every relator matching the predicate; used by family elimination.
  template <typename Pred>
  void remove_relators(Pred&& pred) {
    std::vector<Relator> kept;
    for (auto& r : relators_)
      if (!pred(r)) kept.push_back(std::move(r));
    relators_ = std::move(kept);
  }

 private:
  std::vector<Generator> generators_;
  std::vector<Relator> relators_;
};

struct AbelianInvariants {
  long free_rank = 0;
  std::vector<long long> torsion;  // divisibility chain, entries >= 2
  bool operator==(const AbelianInvariants&) const = default;
  std::string to_string() const;
};

/// H1 of the presented group via Smith normal form of the relator exponent
/// matrix.
AbelianInvariants abelianize(const Presentation& p);

/// Adds a fresh generator with defining relator symbol * w^-1. The presented
/// group is unchanged.
Presentation tietze_define(const Presentation& p, const std::string& symbol,
                           const SubgroupWord& w);

struct PresentationStats {
  int generators = 0;
  int relators = 0;
  int deficiency = 0;           // relators - generators
  int euler_lower_bound = 0;    // n(1 - chi(c)) - 1, for 2-dimensional c
  long h1_free_rank = 0;
  std::vector<long long> h1_torsion;
  long homological_bound_known_part = 0;  // -rk H1; d(H2) is not computed
  bool h2_available = false;
};

PresentationStats presentation_stats(const Presentation& p, const FlagComplex& c,
                                     int n);

}  // namespace raagpres

#endif
