#ifndef RAAGPRES_ORACLE_HPP
#define RAAGPRES_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "raagpres/presentation.hpp"
#include "raagpres/words.hpp"

namespace raagpres {

/// Subgroup presentation of the level-n subgroup from the standard
/// presentation of the ambient group, with Schreier transversal
/// {a_root^p : 0 <= p < n}. After killing the transversal generators it has
/// n(N-1)+1 generators and n * |edges| relators.
Presentation reidemeister_schreier(const FlagComplex& c, int n);

/// HLT-style coset enumeration for the subgroup generated by the given
/// words inside the right-angled Artin group of `c`. Returns the index, or
/// nothing when the live-coset count would exceed `coset_limit`.
std::optional<long> todd_coxeter(const FlagComplex& c,
                                 const std::vector<RaagWord>& subgroup_generators,
                                 long coset_limit = 1'000'000);

struct VerificationReport {
  struct RelatorCheck {
    std::string tag;
    bool sound = false;
  };
  struct GeneratorCheck {
    std::string symbol;
    bool in_subgroup = false;
  };
  std::vector<RelatorCheck> relator_soundness;
  std::vector<GeneratorCheck> image_in_subgroup;
  std::optional<long> index;  // nullopt = overflow
  AbelianInvariants presentation_h1;
  AbelianInvariants oracle_h1;
  bool abelianization_match = false;
  std::optional<bool> counts_match;  // set for raw triangle-free builds

  bool pass(int n) const;
};

/// Runs all four checks for a presentation built over `ctx`.
VerificationReport verify_presentation(const Presentation& p, const BuildContext& ctx,
                                       long coset_limit = 1'000'000);

}  // namespace raagpres

#endif
