#include "zeroapn/artifacts.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "zeroapn/resultant.hpp"

namespace zapn {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Splits off the first whitespace-delimited word.
std::string take_word(std::string& rest) {
  rest = trim(rest);
  const auto sp = rest.find_first_of(" \t");
  std::string word = rest.substr(0, sp);
  rest = sp == std::string::npos ? std::string{} : trim(rest.substr(sp));
  return word;
}

std::array<char, 3> base_names(const std::string& vars) {
  // Unused slots get a byte no expression can contain.
  std::array<char, 3> names{'\x01', '\x02', '\x03'};
  for (std::size_t i = 0; i < vars.size(); ++i) names[i] = vars[i];
  return names;
}

std::size_t variable_index(const std::string& word, std::size_t line) {
  if (word == "x") return 0;
  if (word == "y") return 1;
  if (word == "z") return 2;
  throw std::invalid_argument("artifact line " + std::to_string(line) + ": unknown variable '" + word + "'");
}

Monomial<3> parse_image(const std::string& text) {
  const auto p = parse_polynomial<3>(text);
  if (p.size() != 1) throw std::invalid_argument("substitution image '" + text + "' is not a monomial");
  return p.terms().front();
}

}  // namespace

TrivariatePolynomial ProofArtifact::base() const { return parse_polynomial<3>(base_text, base_names(base_variables)); }

const ArtifactEquation& ProofArtifact::equation(std::string_view name) const {
  for (const auto& e : equations)
    if (e.name == name) return e;
  throw std::invalid_argument(theorem + ": no equation named " + std::string(name));
}

ProofArtifact parse_artifact(std::string_view text) {
  // Join continuation lines first, remembering where each directive started.
  std::vector<std::pair<std::size_t, std::string>> directives;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (trim(raw).empty()) continue;
    if (raw[0] == ' ' || raw[0] == '\t') {
      if (directives.empty()) throw std::invalid_argument("artifact line " + std::to_string(number) + ": stray continuation");
      directives.back().second += ' ' + trim(raw);
    } else {
      directives.emplace_back(number, trim(raw));
    }
  }

  ProofArtifact a;
  bool header = false;
  bool have_base = false;
  for (auto& [line, content] : directives) {
    auto fail = [line = line](const std::string& what) {
      throw std::invalid_argument("artifact line " + std::to_string(line) + ": " + what);
    };
    std::string rest = content;
    const std::string key = take_word(rest);
    if (!header) {
      if (key != "zeroapn-artifact" || rest != "1") fail("expected 'zeroapn-artifact 1' header");
      header = true;
      continue;
    }
    if (key == "theorem") {
      a.theorem = rest;
    } else if (key == "family") {
      a.family = rest;
    } else if (key == "base-variables") {
      a.base_variables.clear();
      while (!rest.empty()) {
        const auto w = take_word(rest);
        if (w.size() != 1) fail("variable names are single letters");
        a.base_variables += w;
      }
      if (a.base_variables.empty() || a.base_variables.size() > 3) fail("one to three base variables");
    } else if (key == "base") {
      a.base_text = rest;
      have_base = true;
    } else if (key == "equation") {
      ArtifactEquation e;
      e.name = take_word(rest);
      e.label = take_word(rest);
      while (!rest.empty()) e.images.push_back(take_word(rest));
      if (e.images.size() != a.base_variables.size()) fail("need one image per base variable");
      a.equations.push_back(std::move(e));
    } else if (key == "literal") {
      const auto name = take_word(rest);
      bool found = false;
      for (auto& e : a.equations) {
        if (e.name == name) {
          e.literal = rest;
          found = true;
        }
      }
      if (!found) fail("literal for undeclared equation " + name);
    } else if (key == "resultant") {
      EliminationStep s;
      s.result = take_word(rest);
      s.lhs = take_word(rest);
      s.rhs = take_word(rest);
      s.var = variable_index(take_word(rest), line);
      if (!rest.empty()) fail("trailing text after resultant step");
      a.steps.push_back(std::move(s));
    } else if (key == "expect") {
      ArtifactExpectation x;
      x.name = take_word(rest);
      x.text = rest;
      a.expectations.push_back(std::move(x));
    } else if (key == "final") {
      a.final_name = rest;
    } else if (key == "factor") {
      const auto mult = take_word(rest);
      unsigned m = 0;
      try {
        m = static_cast<unsigned>(std::stoul(mult));
      } catch (const std::exception&) {
        fail("bad multiplicity '" + mult + "'");
      }
      if (m == 0) fail("multiplicity must be positive");
      a.expected.factors.push_back({parse_univariate(rest), m});
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (!header) throw std::invalid_argument("artifact: empty input");
  if (a.theorem.empty() || !have_base || a.final_name.empty() || a.expected.factors.empty())
    throw std::invalid_argument("artifact " + a.theorem + ": theorem, base, final and factor lines are required");
  a.expected.canonicalize();
  // Parse eagerly so syntax errors surface at load time.
  (void)a.base();
  for (const auto& e : a.equations) {
    for (const auto& img : e.images) (void)parse_image(img);
    if (e.literal) (void)parse_polynomial<3>(*e.literal);
  }
  for (const auto& x : a.expectations) (void)parse_polynomial<3>(x.text);
  return a;
}

ProofArtifact load_artifact_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_artifact(buf.str());
}

ProofArtifact load_artifact(std::string_view id) {
  std::string key(id);
  for (auto& c : key) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& e : embedded_artifacts()) {
    auto a = parse_artifact(e.text);
    if (a.theorem == key || a.family == key) return a;
  }
  throw std::invalid_argument("no proof artifact for " + std::string(id));
}

std::vector<ProofArtifact> load_all_artifacts() {
  std::vector<ProofArtifact> out;
  for (const auto& e : embedded_artifacts()) out.push_back(parse_artifact(e.text));
  return out;
}

TrivariatePolynomial derive_equation(const ProofArtifact& artifact, const ArtifactEquation& equation) {
  std::array<Monomial<3>, 3> images{};
  for (std::size_t i = 0; i < equation.images.size(); ++i) images[i] = parse_image(equation.images[i]);
  return substitute_monomials(artifact.base(), images);
}

std::vector<TranscriptionCheck> check_transcription(const ProofArtifact& artifact) {
  std::vector<TranscriptionCheck> out;
  for (const auto& e : artifact.equations) {
    if (!e.literal) continue;
    TranscriptionCheck c;
    c.equation = e.name;
    c.label = e.label;
    c.derived = derive_equation(artifact, e);
    c.literal = parse_polynomial<3>(*e.literal);
    c.matches = c.derived == c.literal;
    out.push_back(std::move(c));
  }
  return out;
}

ReplayResult replay_elimination(const ProofArtifact& artifact, const ReplayOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.require_transcription) {
    for (const auto& c : check_transcription(artifact)) {
      if (!c.matches)
        throw std::runtime_error(artifact.theorem + ": equation " + c.equation + " " + c.label +
                                 " does not match its derivation");
    }
  }

  std::map<std::string, TrivariatePolynomial> values;
  values["base"] = artifact.base();
  for (const auto& e : artifact.equations) values[e.name] = derive_equation(artifact, e);
  auto lookup = [&](const std::string& name) -> const TrivariatePolynomial& {
    const auto it = values.find(name);
    if (it == values.end()) throw std::invalid_argument(artifact.theorem + ": unknown operand " + name);
    return it->second;
  };

  ReplayResult result;
  for (const auto& step : artifact.steps) {
    const auto& f = lookup(options.swap_operands ? step.rhs : step.lhs);
    const auto& g = lookup(options.swap_operands ? step.lhs : step.rhs);
    auto r = resultant(f, g, step.var);
    if (r.is_zero())
      throw std::runtime_error(artifact.theorem + ": resultant " + step.result + " vanishes identically");
    ReplayIntermediate im{step.result, r, std::nullopt};
    for (const auto& x : artifact.expectations)
      if (x.name == step.result) im.matches_expectation = parse_polynomial<3>(x.text) == r;
    result.intermediates.push_back(std::move(im));
    values[step.result] = std::move(r);
  }

  result.final_polynomial = lookup(artifact.final_name).to_univariate(0);
  if (result.final_polynomial.is_zero())
    throw std::runtime_error(artifact.theorem + ": final polynomial is zero");
  result.factorization = factor(result.final_polynomial);
  result.matches_expected = result.factorization == artifact.expected;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace zapn
