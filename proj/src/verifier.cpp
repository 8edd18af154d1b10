#include "zeroapn/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace zapn {

namespace {

bool claims_iff(const FamilyDescriptor& family) { return family.parameter == FamilyParameter::n; }

FamilyCandidate candidate_at(const FamilyDescriptor& family, unsigned n) {
  auto all = family_candidates(family, n, n);
  if (all.empty()) throw std::invalid_argument(family.id + " has no instance with n = " + std::to_string(n));
  return all.front();
}

}  // namespace

bool FamilyReport::passed() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceCheck& c) { return c.passed(); });
}

FamilyReport verify_family_bruteforce(const FamilyDescriptor& family, unsigned n_max, unsigned n_min,
                                      const FieldOptions& field) {
  FamilyReport report{family.id, family.theorem, {}};
  for (const auto& cand : family_candidates(family, n_min, n_max)) {
    InstanceCheck c;
    c.family = family.id;
    c.k = cand.k;
    c.n = cand.n;
    c.d_raw = cand.d.raw();
    c.d = cand.d.value();
    c.rejection = cand.rejection;
    if (cand.admissible())
      c.expected_zero_apn = true;
    else if (claims_iff(family))
      c.expected_zero_apn = false;
    const auto start = std::chrono::steady_clock::now();
    const FieldContext ctx(cand.n, field);
    const auto r = is_zero_apn_power(ctx, cand.d);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.zero_apn = r.zero_apn;
    c.witness = r.witness;
    report.instances.push_back(std::move(c));
  }
  return report;
}

std::vector<ApnCheck> verify_negative_apn(const FamilyDescriptor& family, unsigned n_max) {
  std::vector<ApnCheck> out;
  for (const auto& cand : enumerate_family_by_n(family, 1, n_max)) {
    const auto* row = reference_row(cand.n);
    if (row == nullptr) continue;
    const auto canon = cyclotomic_canonical(cand.n, cand.d.value());
    const bool listed = std::any_of(row->exponents.begin(), row->exponents.end(), [&](std::int64_t e) {
      return cyclotomic_canonical(cand.n, Exponent(e, cand.n).value()) == canon;
    });
    if (!listed) continue;
    const FieldContext ctx(cand.n);
    const auto s = differential_spectrum(ctx, cand.d);
    out.push_back({family.id, cand.n, cand.d.value(), false, s.delta == 2, s.delta});
  }
  return out;
}

std::vector<ApnCheck> gold_control(unsigned n_lo, unsigned n_hi) {
  std::vector<ApnCheck> out;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const FieldContext ctx(n);
    const auto s = differential_spectrum(ctx, Exponent(3, n));
    // x^{2^i+1} is APN when gcd(i, n) = 1; i = 1 here.
    out.push_back({"gold", n, 3, true, s.delta == 2, s.delta});
  }
  return out;
}

bool SubfieldReport::excluded() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const FactorRoots& f) { return f.criterion_solutions.empty(); });
}

SubfieldReport verify_subfield_exclusion(const ProofArtifact& artifact, const Factorization& factorization,
                                         unsigned n) {
  const auto& family = find_family(artifact.family);
  const auto cand = candidate_at(family, n);
  SubfieldReport report{artifact.theorem, n, cand.d.value(), {}, cand.admissible() || !claims_iff(family)};
  const BinaryPolynomial x = BinaryPolynomial::monomial(1);
  const BinaryPolynomial x1 = x + BinaryPolynomial::one();
  std::optional<FieldContext> ctx;
  for (const auto& fp : factorization.factors) {
    if (fp.factor == x || fp.factor == x1) continue;
    FactorRoots fr{fp.factor, count_roots_in_field(fp.factor, n), {}};
    if (fr.roots_in_field > 0) {
      if (!ctx) ctx.emplace(n);
      for (std::uint64_t e = 2; e < ctx->size(); ++e) {
        const FieldElement v{static_cast<std::uint32_t>(e)};
        if (ctx->evaluate(fp.factor, v).bits != 0) continue;
        const auto lhs = FieldContext::add(FieldContext::add(ctx->pow(FieldContext::add(v, FieldContext::one()), cand.d),
                                                             ctx->pow(v, cand.d)),
                                           FieldContext::one());
        if (lhs.bits == 0) fr.criterion_solutions.push_back(v);
      }
    }
    report.factors.push_back(std::move(fr));
  }
  return report;
}

SubfieldReport verify_subfield_exclusion(const ProofArtifact& artifact, unsigned n) {
  return verify_subfield_exclusion(artifact, artifact.expected, n);
}

std::vector<Table1Row> reproduce_table1(const std::vector<unsigned>& n_set, const FieldOptions& field) {
  std::vector<Table1Row> rows;
  for (unsigned n : n_set) {
    const FieldContext ctx(n, field);
    Table1Row row;
    row.n = n;
    const auto* ref = reference_row(n);
    row.has_reference = ref != nullptr;
    std::set<std::uint64_t> ref_classes;
    if (ref)
      for (auto e : ref->exponents) ref_classes.insert(cyclotomic_canonical(n, Exponent(e, n).value()));

    std::vector<FamilyCandidate> instances;
    for (const auto& f : families())
      for (auto& c : enumerate_family_by_n(f, n, n)) instances.push_back(std::move(c));

    std::set<std::uint64_t> computed;
    for (const auto& c : classify_all_exponents(ctx)) {
      if (!c.is_zero_apn || c.is_apn) continue;
      Table1Class cls{c.d, c.class_size, c.delta, {}, ref_classes.count(c.d) > 0};
      for (const auto& inst : instances) {
        if (cyclotomic_canonical(n, inst.d.value()) != c.d) continue;
        std::string why = inst.family;
        if (inst.k) why += " (k=" + std::to_string(*inst.k) + ")";
        cls.explained_by.push_back(why);
      }
      computed.insert(c.d);
      if (!cls.in_reference) row.extra.push_back(c.d);
      row.classes.push_back(std::move(cls));
    }
    if (ref) {
      for (auto e : ref->exponents)
        if (!computed.count(cyclotomic_canonical(n, Exponent(e, n).value()))) row.missing.push_back(e);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool TheoremVerification::transcription_passed() const {
  return std::all_of(transcription.begin(), transcription.end(), [](const TranscriptionCheck& c) { return c.matches; });
}

bool TheoremVerification::replay_passed() const {
  if (!replay || !replay->matches_expected) return false;
  return std::all_of(replay->intermediates.begin(), replay->intermediates.end(),
                     [](const ReplayIntermediate& i) { return i.matches_expectation.value_or(true); });
}

bool TheoremVerification::subfield_passed() const {
  return std::all_of(subfield.begin(), subfield.end(), [](const SubfieldReport& r) { return r.passed(); });
}

bool TheoremVerification::negative_apn_passed() const {
  return std::all_of(negative_apn.begin(), negative_apn.end(), [](const ApnCheck& c) { return c.passed(); });
}

bool TheoremVerification::passed() const {
  return transcription_passed() && replay_passed() && bruteforce_passed() && subfield_passed() &&
         negative_apn_passed();
}

TheoremVerification verify_theorem(const ProofArtifact& artifact, unsigned n_max, const FieldOptions& field) {
  const auto& family = find_family(artifact.family);
  TheoremVerification v;
  v.theorem = artifact.theorem;
  v.family = artifact.family;
  v.transcription = check_transcription(artifact);
  try {
    v.replay = replay_elimination(artifact);
  } catch (const std::exception& e) {
    v.replay_error = e.what();
  }
  v.bruteforce = verify_family_bruteforce(family, n_max, 3, field);
  // Subfield exclusion runs against the computed factorization when there is
  // one, so it stays meaningful even if the transcription of the factors is off.
  const Factorization& factors = v.replay ? v.replay->factorization : artifact.expected;
  for (const auto& inst : v.bruteforce.instances) {
    if (!inst.expected_zero_apn) continue;
    v.subfield.push_back(verify_subfield_exclusion(artifact, factors, inst.n));
  }
  v.negative_apn = verify_negative_apn(family, std::min(n_max, 11U));
  return v;
}

}  // namespace zapn
