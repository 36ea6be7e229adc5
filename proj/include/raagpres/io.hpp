#ifndef RAAGPRES_IO_HPP
#define RAAGPRES_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "raagpres/oracle.hpp"
#include "raagpres/presentation.hpp"
#include "raagpres/simplifier.hpp"

namespace raagpres {

struct ComplexFile {
  FlagComplex complex;
  std::optional<std::vector<std::string>> ordering;
  std::optional<std::vector<std::pair<std::string, std::string>>> tree;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ComplexFile parse_complex_text(const std::string& text);
ComplexFile parse_complex_file(const std::string& path);
std::string complex_to_json(const FlagComplex& c);

/// Human-readable block in the angle-bracket style.
std::string presentation_to_text(const Presentation& p);
/// Machine-readable document: generators (symbol, role), relators (word, tag)
/// and stats.
std::string presentation_to_json(const Presentation& p, const FlagComplex& c, int n);

std::string report_to_json(const VerificationReport& rep, int n);
std::string report_to_text(const VerificationReport& rep, int n);

std::string log_to_json(const std::vector<EliminationStep>& log);
std::string log_to_text(const std::vector<EliminationStep>& log);

}  // namespace raagpres

#endif
