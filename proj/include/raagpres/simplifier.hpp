#ifndef RAAGPRES_SIMPLIFIER_HPP
#define RAAGPRES_SIMPLIFIER_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "raagpres/builder.hpp"
#include "raagpres/presentation.hpp"

namespace raagpres {

/// A stable letter glued over one 2-simplex of the subdivided complex.
/// `cycle` is the link of the barycentre inside sigma1, in cyclic order;
/// `kept` edges span it (all its tree edges plus Tietze-backed non-tree
/// edges), `dropped` is the one non-tree boundary edge left out.
struct Overlay {
  std::string face;  // barycentre vertex name
  int barycentre = -1;
  int attach = -1;
  std::vector<int> cycle;
  std::vector<std::pair<int, int>> kept_tree_edges;      // (top, bottom) by pos
  std::vector<std::pair<int, int>> kept_nontree_edges;   // (top, bottom)
  std::pair<int, int> dropped{-1, -1};                   // (top, bottom)
  std::vector<std::string> base_generators;              // action order
  std::string tau;
};

struct SimplifyState {
  std::vector<Overlay> overlays;                    // in overlay order
  std::set<std::pair<int, int>> eliminated;         // family edges, (top, bottom)
  std::set<std::pair<int, int>> kept_families;      // pinned survivors
  std::set<std::string> used_faces;

  const Overlay* find(const std::string& face) const;
};

/// All face-barycentre vertices of the ambient complex, in declaration order.
std::vector<std::string> overlay_faces(const FlagComplex& ambient);

/// Adds tau for the given face: Tietze generators for kept non-tree boundary
/// edges, the stable letter, and one action relator per base generator. Every
/// relator is checked trivial in the ambient group.
Presentation add_simplex_overlay(const Presentation& p, const std::string& face,
                                 BuildContext& ctx, SimplifyState& state);

/// The word tau g tau^-1 equals in the ambient group; contract checked by the
/// caller via expansion.
SubgroupWord tau_action(const std::string& base_symbol, const Overlay& ov,
                        const BuildContext& ctx);

struct EliminationCandidate {
  std::string face;
  std::pair<int, int> edge;                    // family edge (top, bottom)
  std::vector<std::pair<int, int>> helpers;    // other non-tree boundary edges
};

/// Faces that can currently trade one present family for a single relator:
/// unused face, family present and not pinned, strand vertex on the boundary,
/// all other non-tree boundary edges already eliminated or pinned.
std::vector<EliminationCandidate> eligible_eliminations(const Presentation& p,
                                                        const BuildContext& ctx,
                                                        const SimplifyState& state);

/// Replaces the size-n family of `edge` by [t_top^-1 tau D, w_0] where D
/// carries the stable letter from the attachment column to the strand column.
Presentation eliminate_family(const Presentation& p, const std::string& face,
                              std::pair<int, int> edge, const BuildContext& ctx,
                              SimplifyState& state);

struct EliminationStep {
  int step = 0;
  std::string face;
  std::pair<std::string, std::string> removed_edge;
  std::optional<std::pair<std::string, std::string>> kept_edge;
  std::string added_relator;
};

struct SimplifyOptions {
  std::vector<std::string> face_order;  // override; empty = greedy fixpoint
  std::vector<std::pair<std::string, std::string>> keep_edges;
};

/// Greedy fixpoint over eligible eliminations; when stuck, pins one family
/// and retries. Returns the simplified presentation and the log.
std::pair<Presentation, std::vector<EliminationStep>> simplify(
    Presentation p, const BuildContext& ctx, SimplifyState& state,
    const SimplifyOptions& opts = {});

/// Families still present in a presentation, as (top, bottom) name pairs.
std::vector<std::pair<std::string, std::string>> remaining_families(
    const Presentation& p);

struct PipelineRun {
  std::shared_ptr<FlagComplex> ambient;
  std::shared_ptr<FlagComplex> sigma1;
  BuildContext ctx;
  SimplifyState state;
  Presentation presentation;
  std::vector<EliminationStep> log;
};

struct OrderingSpec {
  std::vector<std::string> ordering;
  std::vector<std::pair<std::string, std::string>> tree;
};

/// Full 2-complex pipeline: subdivide when the input is an unsubdivided
/// complex, strip face barycentres, build over sigma1, overlay every
/// 2-simplex, then simplify.
PipelineRun overlay_simplify_pipeline(const FlagComplex& input, int n,
                                      const SimplifyOptions& opts = {},
                                      const OrderingSpec* ordering = nullptr);

/// Cones off `loop` in the 1-skeleton and runs the pipeline with the
/// apex-rooted ordering, eliminating one family per cone face in fan order.
/// The loop must contain a non-tree edge of the input's default tree.
PipelineRun cone_off_pipeline(const FlagComplex& c,
                              const std::vector<std::string>& loop, int n);

}  // namespace raagpres

#endif
