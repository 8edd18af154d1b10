#include "zeroapn/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace zapn {

namespace {

using nlohmann::json;

std::string hex(std::uint32_t bits) {
  std::ostringstream out;
  out << std::hex << bits;
  return out.str();
}

std::string witness_hex(const std::optional<FieldElement>& w) { return w ? hex(w->bits) : std::string{}; }

json factorization_json(const Factorization& f) {
  json out = json::array();
  for (const auto& fp : f.factors) out.push_back({{"factor", fp.factor.to_string()}, {"multiplicity", fp.multiplicity}});
  return out;
}

const char* mark(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::string classification_csv(const std::vector<ApnClassification>& rows) {
  std::ostringstream out;
  out << "n,canonical_d,class_size,is_apn,is_zero_apn,is_one_apn,witness\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.d << ',' << r.class_size << ',' << r.is_apn << ',' << r.is_zero_apn << ','
        << r.is_one_apn << ',' << witness_hex(r.witness) << '\n';
  }
  return out.str();
}

std::string classification_json(unsigned n, const std::vector<ApnClassification>& rows) {
  json doc{{"schema", kJsonSchema}, {"kind", "classification"}, {"n", n}};
  json list = json::array();
  for (const auto& r : rows) {
    json row{{"canonical_d", r.d},   {"class_size", r.class_size},   {"delta", r.delta},
             {"is_apn", r.is_apn},   {"is_zero_apn", r.is_zero_apn}, {"is_one_apn", r.is_one_apn},
             {"witness", nullptr}};
    if (r.witness) row["witness"] = hex(r.witness->bits);
    list.push_back(std::move(row));
  }
  doc["rows"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string classification_text(unsigned n, const std::vector<ApnClassification>& rows) {
  std::ostringstream out;
  out << "n = " << n << ", " << rows.size() << " cyclotomic classes\n";
  out << std::setw(10) << "d" << std::setw(6) << "size" << std::setw(7) << "delta" << std::setw(6) << "APN"
      << std::setw(7) << "0-APN" << std::setw(7) << "1-APN" << "  witness\n";
  for (const auto& r : rows) {
    out << std::setw(10) << r.d << std::setw(6) << r.class_size << std::setw(7) << r.delta << std::setw(6)
        << (r.is_apn ? "yes" : "no") << std::setw(7) << (r.is_zero_apn ? "yes" : "no") << std::setw(7)
        << (r.is_one_apn ? "yes" : "no") << "  " << witness_hex(r.witness) << '\n';
  }
  return out.str();
}

std::string table1_json(const std::vector<Table1Row>& rows) {
  json doc{{"schema", kJsonSchema}, {"kind", "table1"}};
  json list = json::array();
  for (const auto& r : rows) {
    json classes = json::array();
    for (const auto& c : r.classes) {
      classes.push_back({{"canonical_d", c.canonical},
                         {"class_size", c.class_size},
                         {"delta", c.delta},
                         {"in_reference", c.in_reference},
                         {"explained_by", c.explained_by}});
    }
    json row{{"n", r.n}, {"has_reference", r.has_reference}, {"classes", std::move(classes)}};
    if (r.has_reference) {
      row["missing"] = r.missing;
      row["extra"] = r.extra;
      row["matches_reference"] = r.matches_reference();
    }
    list.push_back(std::move(row));
  }
  doc["rows"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string table1_text(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "n = " << r.n << ": " << r.classes.size() << " classes 0-APN but not APN\n";
    for (const auto& c : r.classes) {
      out << "  " << std::setw(8) << c.canonical << "  delta " << std::setw(3) << c.delta << "  "
          << (r.has_reference ? (c.in_reference ? "listed  " : "unlisted") : "") << "  ";
      if (c.explained_by.empty()) {
        out << "-";
      } else {
        for (std::size_t i = 0; i < c.explained_by.size(); ++i) out << (i ? ", " : "") << c.explained_by[i];
      }
      out << '\n';
    }
    if (!r.has_reference) {
      out << "  no reference\n";
      continue;
    }
    out << "  missing:";
    for (auto e : r.missing) out << ' ' << e;
    out << "\n  extra:";
    for (auto e : r.extra) out << ' ' << e;
    out << "\n  " << (r.matches_reference() ? "matches reference" : "differs from reference") << '\n';
  }
  return out.str();
}

std::string verification_json(const std::vector<TheoremVerification>& runs) {
  json doc{{"schema", kJsonSchema}, {"kind", "verification"}};
  json list = json::array();
  for (const auto& v : runs) {
    json t{{"theorem", v.theorem}, {"family", v.family}, {"passed", v.passed()}};
    json tr = json::array();
    for (const auto& c : v.transcription) tr.push_back({{"equation", c.equation}, {"label", c.label}, {"matches", c.matches}});
    t["transcription"] = std::move(tr);
    json replay{{"passed", v.replay_passed()}};
    if (v.replay) {
      replay["seconds"] = v.replay->seconds;
      replay["degree"] = v.replay->final_polynomial.deg();
      replay["factorization"] = factorization_json(v.replay->factorization);
      json inter = json::array();
      for (const auto& i : v.replay->intermediates) {
        json e{{"name", i.name}, {"terms", i.value.size()}};
        if (i.matches_expectation) e["matches_expectation"] = *i.matches_expectation;
        inter.push_back(std::move(e));
      }
      replay["intermediates"] = std::move(inter);
    } else {
      replay["error"] = v.replay_error;
    }
    t["replay"] = std::move(replay);
    json bf = json::array();
    for (const auto& i : v.bruteforce.instances) {
      json e{{"n", i.n}, {"d", i.d}, {"d_raw", i.d_raw}, {"zero_apn", i.zero_apn},
             {"passed", i.passed()}, {"seconds", i.seconds}};
      if (i.k) e["k"] = *i.k;
      if (i.rejection) e["rejected"] = *i.rejection;
      if (i.expected_zero_apn) e["expected_zero_apn"] = *i.expected_zero_apn;
      if (i.witness) e["witness"] = hex(i.witness->bits);
      bf.push_back(std::move(e));
    }
    t["bruteforce"] = std::move(bf);
    json sf = json::array();
    for (const auto& r : v.subfield) {
      json factors = json::array();
      for (const auto& f : r.factors) {
        json sols = json::array();
        for (auto s : f.criterion_solutions) sols.push_back(hex(s.bits));
        factors.push_back({{"factor", f.factor.to_string()}, {"roots", f.roots_in_field}, {"criterion_solutions", sols}});
      }
      sf.push_back({{"n", r.n}, {"d", r.d}, {"expect_exclusion", r.expect_exclusion}, {"excluded", r.excluded()},
                    {"passed", r.passed()}, {"factors", std::move(factors)}});
    }
    t["subfield"] = std::move(sf);
    json na = json::array();
    for (const auto& c : v.negative_apn)
      na.push_back({{"n", c.n}, {"d", c.d}, {"delta", c.delta}, {"apn", c.apn}, {"passed", c.passed()}});
    t["negative_apn"] = std::move(na);
    list.push_back(std::move(t));
  }
  doc["theorems"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string verification_text(const std::vector<TheoremVerification>& runs) {
  std::ostringstream out;
  for (const auto& v : runs) {
    out << v.theorem << " (" << v.family << ")\n";
    out << "  transcription  " << mark(v.transcription_passed()) << "  " << v.transcription.size() << " equations\n";
    out << "  replay         " << mark(v.replay_passed());
    if (v.replay) {
      out << "  degree " << v.replay->final_polynomial.deg() << ", " << v.replay->factorization.factors.size()
          << " distinct factors, " << std::fixed << std::setprecision(2) << v.replay->seconds << " s";
    } else {
      out << "  " << v.replay_error;
    }
    out << '\n';
    out << "  brute force    " << mark(v.bruteforce_passed()) << "  ";
    for (const auto& i : v.bruteforce.instances) {
      out << i.n;
      if (!i.zero_apn) out << "[witness " << witness_hex(i.witness) << "]";
      if (!i.passed()) out << "!";
      out << ' ';
    }
    out << '\n';
    out << "  subfield       " << mark(v.subfield_passed()) << "  " << v.subfield.size() << " fields\n";
    out << "  not APN        " << mark(v.negative_apn_passed()) << "  ";
    for (const auto& c : v.negative_apn) out << "(" << c.d << "," << c.n << ") ";
    out << '\n';
  }
  return out.str();
}

}  // namespace zapn
