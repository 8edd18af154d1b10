#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zeroapn/gf2_poly.hpp"
#include "zeroapn/sparse_poly.hpp"

namespace zapn {

// Proof artifacts: the equation system behind one theorem, stored twice (as
// printed, and as a substitution plan applied to the base criterion
// polynomial), an elimination plan and the expected final factorization.
//
// Text format, one directive per line, '#' comments, indented lines continue
// the previous directive:
//
//   zeroapn-artifact 1
//   theorem TH2
//   family T3
//   base-variables x y             names of the base polynomial's variables
//   base <poly>
//   equation E1 <label> <img>...   one monomial in x, y, z per base variable
//   literal E1 <poly>              the equation as printed
//   resultant R E1 E2 y            R = Res(E1, E2) with respect to y
//   expect R <poly>                optional check of an intermediate
//   final R                        univariate in x ("base" when no elimination)
//   factor <mult> <poly>           expected factorization, one line per factor

struct EmbeddedArtifact {
  std::string_view name;
  std::string_view text;
};

std::span<const EmbeddedArtifact> embedded_artifacts();

struct ArtifactEquation {
  std::string name;
  std::string label;
  std::vector<std::string> images;
  std::optional<std::string> literal;
};

struct EliminationStep {
  std::string result;
  std::string lhs;
  std::string rhs;
  std::size_t var = 1;  // 0 = x, 1 = y, 2 = z
};

struct ArtifactExpectation {
  std::string name;
  std::string text;
};

struct ProofArtifact {
  std::string theorem;
  std::string family;
  std::string base_variables = "xy";
  std::string base_text;
  std::vector<ArtifactEquation> equations;
  std::vector<EliminationStep> steps;
  std::vector<ArtifactExpectation> expectations;
  std::string final_name;
  Factorization expected;

  /// Base polynomial with its variables in positions 0, 1, 2.
  TrivariatePolynomial base() const;
  const ArtifactEquation& equation(std::string_view name) const;
};

/// Throws std::invalid_argument with a line number on malformed input.
ProofArtifact parse_artifact(std::string_view text);
ProofArtifact load_artifact_file(const std::filesystem::path& path);
/// Embedded artifact by theorem (TH1..TH7) or family (T1..T7) id.
ProofArtifact load_artifact(std::string_view id);
std::vector<ProofArtifact> load_all_artifacts();

/// The equation regenerated from the base polynomial by its substitution plan.
TrivariatePolynomial derive_equation(const ProofArtifact& artifact, const ArtifactEquation& equation);

struct TranscriptionCheck {
  std::string equation;
  std::string label;
  bool matches = false;
  TrivariatePolynomial derived;
  TrivariatePolynomial literal;
};

/// Derived versus printed, for every equation that has a literal.
std::vector<TranscriptionCheck> check_transcription(const ProofArtifact& artifact);

struct ReplayOptions {
  /// Feed each resultant its operands in reverse order.
  bool swap_operands = false;
  /// Refuse to eliminate when a literal disagrees with its derivation.
  bool require_transcription = true;
};

struct ReplayIntermediate {
  std::string name;
  TrivariatePolynomial value;
  std::optional<bool> matches_expectation;
};

struct ReplayResult {
  std::vector<ReplayIntermediate> intermediates;
  BinaryPolynomial final_polynomial;
  Factorization factorization;  // canonical order
  bool matches_expected = false;
  double seconds = 0;
};

/// Runs the elimination plan on the derived equations and factors the final
/// univariate polynomial. Throws std::runtime_error on a transcription
/// mismatch or a resultant that vanishes identically.
ReplayResult replay_elimination(const ProofArtifact& artifact, const ReplayOptions& options = {});

}  // namespace zapn
