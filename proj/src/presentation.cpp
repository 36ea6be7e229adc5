#include "raagpres/presentation.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "raagpres/snf.hpp"

namespace raagpres {

std::string role_name(GeneratorRole r) {
  switch (r) {
    case GeneratorRole::Lambda: return "lambda";
    case GeneratorRole::TreeStable: return "tree_stable";
    case GeneratorRole::SimplexStable: return "simplex_stable";
    case GeneratorRole::Tietze: return "tietze";
    case GeneratorRole::DirectedEdge: return "directed_edge";
    case GeneratorRole::Schreier: return "schreier";
  }
  return "?";
}

std::string RelationTag::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::TreeCommutator: os << "tree_commutator(" << a << ")"; break;
    case Kind::Family: os << "family({" << a << "," << b << "}," << index << ")"; break;
    case Kind::TauAction: os << "tau_action(" << a << "," << b << ")"; break;
    case Kind::Elimination: os << "elimination(" << a << ",{" << b << "," << c << "})"; break;
    case Kind::TietzeDefinition: os << "tietze_definition(" << a << ")"; break;
    case Kind::DicksLeary: os << "dicks_leary(" << a << ",n=" << index << ")"; break;
    case Kind::Schreier: os << "schreier(" << a << ",p=" << index << ")"; break;
  }
  return os.str();
}

void Presentation::add_generator(Generator g) {
  if (has_generator(g.symbol))
    throw std::invalid_argument("generator symbol collision: " + g.symbol);
  generators_.push_back(std::move(g));
}

void Presentation::add_relator(Relator r) {
  for (const auto& l : r.word)
    if (!has_generator(l.symbol))
      throw std::invalid_argument("relator uses undeclared generator: " + l.symbol);
  relators_.push_back(std::move(r));
}

bool Presentation::has_generator(const std::string& symbol) const {
  for (const auto& g : generators_)
    if (g.symbol == symbol) return true;
  return false;
}

const Generator& Presentation::generator(const std::string& symbol) const {
  for (const auto& g : generators_)
    if (g.symbol == symbol) return g;
  throw std::invalid_argument("no such generator: " + symbol);
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  os << "Z^" << free_rank;
  for (auto t : torsion) os << " + Z/" << t;
  return os.str();
}

AbelianInvariants abelianize(const Presentation& p) {
  std::map<std::string, int> col;
  for (const auto& g : p.generators()) col[g.symbol] = static_cast<int>(col.size());
  IntMatrix m;
  for (const auto& r : p.relators()) {
    std::vector<BigInt> row(std::max<std::size_t>(col.size(), 1), 0);
    for (const auto& l : r.word) row[col.at(l.symbol)] += l.sign;
    m.push_back(std::move(row));
  }
  AbelianInvariants inv;
  if (m.empty()) {
    inv.free_rank = static_cast<long>(p.generators().size());
    return inv;
  }
  auto snf = smith_normal_form(m);
  inv.free_rank = static_cast<long>(p.generators().size()) - snf.rank;
  for (int i = 0; i < snf.rank; ++i)
    if (snf.diagonal[i] > 1)
      inv.torsion.push_back(static_cast<long long>(snf.diagonal[i]));
  return inv;
}

Presentation tietze_define(const Presentation& p, const std::string& symbol,
                           const SubgroupWord& w) {
  if (p.has_generator(symbol))
    throw std::invalid_argument("tietze_define: symbol exists: " + symbol);
  Presentation q = p;
  q.add_generator({symbol, GeneratorRole::Tietze, symbol});
  Relator r;
  r.word = sub_concat({{{symbol, 1}}, sub_inverse(w)});
  r.tag = {RelationTag::Kind::TietzeDefinition, symbol, "", "", -1};
  q.add_relator(std::move(r));
  return q;
}

PresentationStats presentation_stats(const Presentation& p, const FlagComplex& c,
                                     int n) {
  PresentationStats s;
  s.generators = static_cast<int>(p.generators().size());
  s.relators = static_cast<int>(p.relators().size());
  s.deficiency = s.relators - s.generators;
  s.euler_lower_bound = n * (1 - euler_characteristic(c)) - 1;
  auto inv = abelianize(p);
  s.h1_free_rank = inv.free_rank;
  s.h1_torsion = inv.torsion;
  s.homological_bound_known_part = -inv.free_rank;
  s.h2_available = false;
  return s;
}

}  // namespace raagpres
