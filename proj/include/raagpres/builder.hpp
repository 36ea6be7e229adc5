#ifndef RAAGPRES_BUILDER_HPP
#define RAAGPRES_BUILDER_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "raagpres/presentation.hpp"
#include "raagpres/words.hpp"

namespace raagpres {

/// gamma_k = theta^n(parent(k), root) lambda; expands to a_parent(k)^n.
SubgroupWord gamma_word(const BuildContext& ctx, int k);

/// The loop words w_{i,0..n-1} for the strand at parent(k) closing through
/// the non-tree predecessor `beta`:
///   w_0 = theta^1(parent(k), beta),
///   w_j = theta^{j+1}(parent(k), beta) w_0^-1 ... w_{j-1}^-1,
/// so that w_j expands to a_parent(k)^j w_0 a_parent(k)^-j.
std::vector<SubgroupWord> family_words(const BuildContext& ctx, int k, int beta);

/// The explicit presentation of the level-n subgroup over a connected
/// triangle-free complex: generators {lambda, t_2..t_N}, one tree commutator
/// [t_k, gamma_k] per k >= 2, and one size-n family per non-tree edge.
/// Relator count is N - 1 + n(1 - chi).
Presentation build_gamma_presentation(const BuildContext& ctx);

/// Truncated presentation of the kernel on directed-edge generators with
/// relators e_1^m ... e_k^m over directed cycles of length <= max_cycle_len
/// and 1 <= m <= n.
struct DicksLearyResult {
  Presentation presentation;
  std::map<std::string, std::pair<int, int>> edge_of_symbol;  // directed (u, v)
};

DicksLearyResult dicks_leary(const FlagComplex& c, int n, int max_cycle_len);

/// Expansion of a Dicks-Leary word into the ambient group: (u,v) -> a_u a_v^-1.
RaagWord dicks_leary_expand(const DicksLearyResult& dl, const SubgroupWord& w);

}  // namespace raagpres

#endif
