#include "raagpres/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace raagpres {

using json = nlohmann::ordered_json;

namespace {

Provenance provenance_from(const std::string& s) {
  if (s == "original") return Provenance::Original;
  if (s == "edge") return Provenance::EdgeBarycentre;
  if (s == "face") return Provenance::FaceBarycentre;
  throw ParseError("bad provenance value: " + s);
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Original: return "original";
    case Provenance::EdgeBarycentre: return "edge";
    case Provenance::FaceBarycentre: return "face";
  }
  return "?";
}

}  // namespace

ComplexFile parse_complex_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw ParseError("document must carry vertices and edges");
  try {
    std::vector<std::string> vertices = doc["vertices"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edges must be pairs");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    std::vector<std::array<std::string, 3>> triangles;
    if (doc.contains("triangles"))
      for (const auto& t : doc["triangles"]) {
        if (!t.is_array() || t.size() != 3)
          throw ParseError("triangles must be triples");
        triangles.push_back({t[0].get<std::string>(), t[1].get<std::string>(),
                             t[2].get<std::string>()});
      }
    std::map<std::string, Provenance> prov;
    if (doc.contains("provenance"))
      for (auto it = doc["provenance"].begin(); it != doc["provenance"].end(); ++it)
        prov[it.key()] = provenance_from(it.value().get<std::string>());
    ComplexFile out{FlagComplex(vertices, edges, triangles, prov), {}, {}};
    if (doc.contains("ordering"))
      out.ordering = doc["ordering"].get<std::vector<std::string>>();
    if (doc.contains("tree")) {
      std::vector<std::pair<std::string, std::string>> tree;
      for (const auto& e : doc["tree"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("tree edges must be pairs");
        tree.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      }
      out.tree = std::move(tree);
    }
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

ComplexFile parse_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_complex_text(ss.str());
}

std::string complex_to_json(const FlagComplex& c) {
  json doc;
  doc["vertices"] = c.vertex_names();
  json edges = json::array();
  for (const auto& [u, v] : c.edges())
    edges.push_back({c.vertex_name(u), c.vertex_name(v)});
  doc["edges"] = std::move(edges);
  json tris = json::array();
  for (const auto& t : c.triangles())
    tris.push_back({c.vertex_name(t[0]), c.vertex_name(t[1]), c.vertex_name(t[2])});
  doc["triangles"] = std::move(tris);
  if (c.has_provenance()) {
    json prov = json::object();
    for (int v = 0; v < c.vertex_count(); ++v)
      if (auto p = c.provenance(v)) prov[c.vertex_name(v)] = provenance_name(*p);
    doc["provenance"] = std::move(prov);
  }
  return doc.dump(2);
}

std::string presentation_to_text(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) os << ", ";
    os << p.generators()[i].symbol;
  }
  os << " |\n";
  for (const auto& r : p.relators())
    os << "  " << word_to_string(r.word) << "    [" << r.tag.to_string() << "]\n";
  os << ">\n";
  return os.str();
}

namespace {

json tag_to_json(const RelationTag& t) {
  json out;
  using Kind = RelationTag::Kind;
  switch (t.kind) {
    case Kind::TreeCommutator:
      out["kind"] = "tree_commutator";
      out["vertex"] = t.a;
      break;
    case Kind::Family:
      out["kind"] = "family";
      out["edge"] = {t.a, t.b};
      out["index"] = t.index;
      break;
    case Kind::TauAction:
      out["kind"] = "tau_action";
      out["simplex"] = t.a;
      out["generator"] = t.b;
      break;
    case Kind::Elimination:
      out["kind"] = "elimination";
      out["simplex"] = t.a;
      out["edge"] = {t.b, t.c};
      break;
    case Kind::TietzeDefinition:
      out["kind"] = "tietze_definition";
      out["symbol"] = t.a;
      break;
    case Kind::DicksLeary:
      out["kind"] = "dicks_leary";
      out["cycle"] = t.a;
      out["exponent"] = t.index;
      break;
    case Kind::Schreier:
      out["kind"] = "schreier";
      out["edge"] = t.a;
      out["level"] = t.index;
      break;
  }
  return out;
}

}  // namespace

std::string presentation_to_json(const Presentation& p, const FlagComplex& c, int n) {
  json doc;
  json gens = json::array();
  for (const auto& g : p.generators()) {
    json jg;
    jg["symbol"] = g.symbol;
    jg["role"] = role_name(g.role);
    if (!g.detail.empty()) jg["detail"] = g.detail;
    gens.push_back(std::move(jg));
  }
  doc["generators"] = std::move(gens);
  json rels = json::array();
  for (const auto& r : p.relators()) {
    json jr;
    jr["word"] = word_to_string(r.word);
    jr["tag"] = tag_to_json(r.tag);
    rels.push_back(std::move(jr));
  }
  doc["relators"] = std::move(rels);
  auto stats = presentation_stats(p, c, n);
  json js;
  js["generators"] = stats.generators;
  js["relators"] = stats.relators;
  js["deficiency"] = stats.deficiency;
  js["euler_lower_bound"] = stats.euler_lower_bound;
  js["h1_free_rank"] = stats.h1_free_rank;
  js["h1_torsion"] = stats.h1_torsion;
  js["homological_bound_known_part"] = stats.homological_bound_known_part;
  js["h2_available"] = stats.h2_available;
  doc["stats"] = std::move(js);
  return doc.dump(2);
}

std::string report_to_json(const VerificationReport& rep, int n) {
  json doc;
  json rels = json::array();
  for (const auto& r : rep.relator_soundness)
    rels.push_back({{"tag", r.tag}, {"sound", r.sound}});
  doc["relator_soundness"] = std::move(rels);
  json gens = json::array();
  for (const auto& g : rep.image_in_subgroup)
    gens.push_back({{"symbol", g.symbol}, {"in_subgroup", g.in_subgroup}});
  doc["image_in_subgroup"] = std::move(gens);
  if (rep.index)
    doc["index"] = *rep.index;
  else
    doc["index"] = "overflow";
  doc["presentation_h1"] = rep.presentation_h1.to_string();
  doc["oracle_h1"] = rep.oracle_h1.to_string();
  doc["abelianization_match"] = rep.abelianization_match;
  if (rep.counts_match)
    doc["counts_match"] = *rep.counts_match;
  else
    doc["counts_match"] = "not_applicable";
  doc["pass"] = rep.pass(n);
  return doc.dump(2);
}

std::string report_to_text(const VerificationReport& rep, int n) {
  std::ostringstream os;
  int bad_rel = 0;
  for (const auto& r : rep.relator_soundness)
    if (!r.sound) {
      os << "UNSOUND relator " << r.tag << "\n";
      ++bad_rel;
    }
  os << "relators sound: " << (rep.relator_soundness.size() - bad_rel) << "/"
     << rep.relator_soundness.size() << "\n";
  int bad_gen = 0;
  for (const auto& g : rep.image_in_subgroup)
    if (!g.in_subgroup) {
      os << "GENERATOR IMAGE OUTSIDE SUBGROUP: " << g.symbol << "\n";
      ++bad_gen;
    }
  os << "generator images in subgroup: " << (rep.image_in_subgroup.size() - bad_gen)
     << "/" << rep.image_in_subgroup.size() << "\n";
  if (rep.index)
    os << "coset index: " << *rep.index << " (expected " << n << ")\n";
  else
    os << "coset index: overflow\n";
  os << "abelianization: " << rep.presentation_h1.to_string() << " vs oracle "
     << rep.oracle_h1.to_string() << " -> "
     << (rep.abelianization_match ? "match" : "MISMATCH") << "\n";
  if (rep.counts_match)
    os << "relator count formula: " << (*rep.counts_match ? "match" : "MISMATCH")
       << "\n";
  else
    os << "relator count formula: not applicable\n";
  os << (rep.pass(n) ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string log_to_json(const std::vector<EliminationStep>& log) {
  json out = json::array();
  for (const auto& s : log) {
    json js;
    js["step"] = s.step;
    js["simplex"] = s.face;
    js["removed_family_edge"] = {s.removed_edge.first, s.removed_edge.second};
    if (s.kept_edge)
      js["kept_family_edge"] = {s.kept_edge->first, s.kept_edge->second};
    js["added_relator"] = s.added_relator;
    out.push_back(std::move(js));
  }
  return out.dump(2);
}

std::string log_to_text(const std::vector<EliminationStep>& log) {
  std::ostringstream os;
  for (const auto& s : log) {
    os << "step " << s.step << ": " << s.face << " removes F("
       << s.removed_edge.first << "," << s.removed_edge.second << ")";
    if (s.kept_edge)
      os << " keeping F(" << s.kept_edge->first << "," << s.kept_edge->second << ")";
    os << "; adds " << s.added_relator << "\n";
  }
  return os.str();
}

}  // namespace raagpres
