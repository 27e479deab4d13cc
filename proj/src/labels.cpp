#include "f4l/labels.hpp"

#include <algorithm>
#include <stdexcept>

namespace f4l {

std::string CarterLabel::str() const {
  std::string s = "phi{" + std::to_string(d) + "," + std::to_string(b) + "}";
  for (int i = 0; i < primes; ++i) s += "'";
  return s;
}

std::string CarterLabel::latex() const {
  std::string s = "\\phi_{" + std::to_string(d) + "," + std::to_string(b) + "}";
  for (int i = 0; i < primes; ++i) s += "'";
  return s;
}

std::span<const LabelRow> label_dataset() {
  // Kondo name, Carter (d, b, primes), a-invariant, values on the classes
  // of s1 (= s2), of s3 (= s4), and of s2 s3.
  static const LabelRow rows[25] = {
      {"1_1", 1, 0, 0, 0, 1, 1, 1},
      {"4_2", 4, 1, 0, 1, 2, 2, 2},
      {"2_1", 2, 4, 2, 1, 2, 0, 0},
      {"2_3", 2, 4, 1, 1, 0, 2, 0},
      {"9_1", 9, 2, 0, 2, 3, 3, 1},
      {"8_1", 8, 3, 2, 3, 4, 0, 0},
      {"8_3", 8, 3, 1, 3, 0, 4, 0},
      {"12_1", 12, 4, 0, 4, 0, 0, 0},
      {"16_1", 16, 5, 0, 4, 0, 0, 0},
      {"9_2", 9, 6, 2, 4, 3, -3, -1},
      {"6_2", 6, 6, 2, 4, 0, 0, 2},
      {"9_3", 9, 6, 1, 4, -3, 3, -1},
      {"6_1", 6, 6, 1, 4, 0, 0, -2},
      {"4_4", 4, 7, 1, 4, -2, 2, -2},
      {"4_3", 4, 7, 2, 4, 2, -2, -2},
      {"4_1", 4, 8, 0, 4, 0, 0, 0},
      {"1_3", 1, 12, 1, 4, -1, 1, -1},
      {"1_2", 1, 12, 2, 4, 1, -1, -1},
      {"8_2", 8, 9, 1, 9, -4, 0, 0},
      {"8_4", 8, 9, 2, 9, 0, -4, 0},
      {"9_4", 9, 10, 0, 10, -3, -3, 1},
      {"4_5", 4, 13, 0, 13, -2, -2, 2},
      {"2_2", 2, 16, 1, 13, -2, 0, 0},
      {"2_4", 2, 16, 2, 13, 0, -2, 0},
      {"1_4", 1, 24, 0, 24, -1, -1, 1},
  };
  return rows;
}

const LabelRow& dataset_row(const std::string& kondo) {
  for (const LabelRow& r : label_dataset())
    if (kondo == r.kondo) return r;
  throw std::invalid_argument("no dataset row for " + kondo);
}

std::string alias_chi(const std::string& kondo) {
  const auto pos = kondo.find('_');
  if (pos == std::string::npos) throw std::invalid_argument("bad Kondo name: " + kondo);
  return "chi{" + kondo.substr(0, pos) + "," + kondo.substr(pos + 1) + "}";
}

Convention convention_from_string(const std::string& s) {
  if (s == "C" || s == "c" || s == "carter") return Convention::C;
  if (s == "L" || s == "l" || s == "lusztig") return Convention::L;
  throw std::invalid_argument("unknown convention: " + s);
}

namespace {

const std::vector<std::pair<std::string, std::string>>& documented_swaps() {
  static const std::vector<std::pair<std::string, std::string>> swaps = {
      {"1_2", "1_3"}, {"2_1", "2_3"}, {"2_2", "2_4"}, {"4_3", "4_4"},
      {"8_1", "8_3"}, {"8_2", "8_4"}, {"9_2", "9_3"},
  };
  return swaps;
}

// Row order of the documented conversion scheme (Carter-style name on the
// Lusztig side -> Kondo name).
const std::vector<std::pair<CarterLabel, std::string>>& documented_conversion() {
  static const std::vector<std::pair<CarterLabel, std::string>> rows = {
      {{1, 0, 0}, "1_1"},   {{1, 12, 2}, "1_3"}, {{1, 12, 1}, "1_2"}, {{1, 24, 0}, "1_4"},
      {{2, 4, 2}, "2_3"},   {{2, 16, 1}, "2_4"}, {{2, 4, 1}, "2_1"},  {{2, 16, 2}, "2_2"},
      {{4, 8, 0}, "4_1"},   {{9, 2, 0}, "9_1"},  {{9, 6, 2}, "9_3"},  {{9, 6, 1}, "9_2"},
      {{9, 10, 0}, "9_4"},  {{6, 6, 1}, "6_1"},  {{6, 6, 2}, "6_2"},  {{12, 4, 0}, "12_1"},
      {{4, 1, 0}, "4_2"},   {{4, 7, 2}, "4_4"},  {{4, 7, 1}, "4_3"},  {{4, 13, 0}, "4_5"},
      {{8, 3, 2}, "8_3"},   {{8, 9, 1}, "8_4"},  {{8, 3, 1}, "8_1"},  {{8, 9, 2}, "8_2"},
      {{16, 5, 0}, "16_1"},
  };
  return rows;
}

}  // namespace

std::map<std::string, std::string> iota_on_kondo(const F4CharTable& t) {
  const int nc = t.classes().num_classes();
  const WeylGroup& g = t.enumeration().group();

  // Image of each class under the diagram flip s1<->s4, s2<->s3.
  std::vector<int> flipped_class(nc);
  for (int c = 0; c < nc; ++c) {
    std::vector<int> w = *t.enumeration().at(t.classes().reps[c]).word;
    for (int& i : w) i = 3 - i;
    flipped_class[c] = t.class_of(g.from_word(w));
  }

  std::map<std::string, std::string> out;
  for (const CharacterRecord& r : t.records()) {
    std::vector<long long> vals(nc);
    for (int c = 0; c < nc; ++c) vals[c] = r.values[flipped_class[c]];
    const int img = t.index_by_values(vals);
    if (img < 0) throw std::logic_error("iota: flipped character is not in the table");
    out[r.kondo] = t.records()[img].kondo;
  }

  // Must equal the documented seven swaps, all other characters fixed.
  for (const auto& [k, v] : out) {
    bool swapped = false;
    for (const auto& [a, b] : documented_swaps())
      if ((k == a && v == b) || (k == b && v == a)) swapped = true;
    const bool fixed = (k == v);
    bool listed = false;
    for (const auto& [a, b] : documented_swaps()) listed = listed || k == a || k == b;
    if (listed ? !swapped : !fixed)
      throw std::logic_error("iota: computed permutation deviates at " + k + " -> " + v);
  }
  return out;
}

std::map<std::string, std::pair<std::string, CarterLabel>> assign_labels(const F4CharTable& t,
                                                                         Convention c) {
  std::map<std::string, std::string> iota;
  if (c == Convention::L) iota = iota_on_kondo(t);
  std::map<std::string, std::pair<std::string, CarterLabel>> out;
  for (const CharacterRecord& r : t.records()) {
    const std::string name = c == Convention::C ? r.kondo : iota.at(r.kondo);
    const LabelRow& row = dataset_row(name);
    out[r.kondo] = {name, CarterLabel{row.d, row.b, row.primes}};
  }
  return out;
}

std::vector<std::pair<CarterLabel, std::string>> conversion_table(const F4CharTable& t) {
  const auto iota = iota_on_kondo(t);
  // The Carter-style name of a character and its Kondo name on the
  // Lusztig side differ from the plain dataset pairing exactly by iota.
  std::map<std::string, std::string> computed;  // carter str -> kondo
  for (const LabelRow& r : label_dataset())
    computed[CarterLabel{r.d, r.b, r.primes}.str()] = iota.at(r.kondo);

  std::vector<std::pair<CarterLabel, std::string>> out;
  for (const auto& [carter, kondo] : documented_conversion()) {
    const auto it = computed.find(carter.str());
    if (it == computed.end() || it->second != kondo)
      throw std::logic_error("conversion scheme mismatch at " + carter.str());
    out.emplace_back(carter, kondo);
  }
  if (computed.size() != out.size()) throw std::logic_error("conversion scheme row count mismatch");
  return out;
}

std::array<FamilyMember, 4> four_element_family() {
  return {{
      {"[4_2]", "(1,1)", "phi{4,1}"},
      {"[2_1]", "(g2,1)", "phi{2,4}''"},
      {"[2_3]", "(1,eps)", "phi{2,4}'"},
      {"B2[1]", "(g2,eps)", "B2,1"},
  }};
}

std::string family_note() {
  return "the primes on phi{2,4}'' and phi{2,4}' in the historical Carter-side table "
         "must be exchanged to match the conversion scheme";
}

std::string g2_naming_note() {
  return "for relative Weyl groups of type G2, Spaltenstein's eps_c/eps_l names for the "
         "degree-1 characters use the opposite long/short convention to the diagrams "
         "computed here; no automated mapping is attempted";
}

namespace {

DegreeEvaluation evaluate(const GenericDegree& gd, int a, int b) {
  DegreeEvaluation e;
  e.rep = gd.rep;
  e.a = a;
  e.b = b;
  e.reduced = specialize(gd.value, a, b);
  const auto [c, k] = lowest_term(e.reduced);
  e.low_coeff = c;
  e.low_exp = k;
  return e;
}

ClaimCheck check_claim(const std::string& unip, const DegreeEvaluation& direct,
                       const DegreeEvaluation& swapped, const Rational& pub_coeff, int pub_exp) {
  ClaimCheck c;
  c.unip_label = unip;
  c.published_coeff = pub_coeff;
  c.published_exp = pub_exp;
  if (direct.low_coeff == pub_coeff && direct.low_exp == pub_exp) {
    c.status = "confirmed";
    c.note = "direct evaluation matches the published leading term";
  } else if (direct.low_exp == pub_exp) {
    c.status = "coefficient-discrepancy";
    c.note = "direct evaluation gives lowest term " + direct.low_coeff.str() + "*q^" +
             std::to_string(direct.low_exp) + " against published " + pub_coeff.str() + "*q^" +
             std::to_string(pub_exp) + "; exchanged assignment gives " + swapped.low_coeff.str() +
             "*q^" + std::to_string(swapped.low_exp);
  } else {
    c.status = "assignment-dependent";
    c.note = "direct evaluation gives lowest term " + direct.low_coeff.str() + "*q^" +
             std::to_string(direct.low_exp) + ", exchanged assignment " +
             swapped.low_coeff.str() + "*q^" + std::to_string(swapped.low_exp) +
             "; published " + pub_coeff.str() + "*q^" + std::to_string(pub_exp);
  }
  return c;
}

}  // namespace

DegreeReport degree_report(DegreeCase which, const GenericDegree& d21, const GenericDegree& d23) {
  const int b = which == DegreeCase::TwistedE6 ? 2 : 4;
  DegreeReport r;
  r.which = which;
  const DegreeEvaluation e21d = evaluate(d21, 1, b), e21s = evaluate(d21, b, 1);
  const DegreeEvaluation e23d = evaluate(d23, 1, b), e23s = evaluate(d23, b, 1);
  r.evaluations = {e21d, e21s, e23d, e23s};

  const Rational half(1, 2);
  if (which == DegreeCase::TwistedE6) {
    r.claims.push_back(check_claim("[2_1]", e21d, e21s, half, 3));
    r.claims.push_back(check_claim("[2_3]", e23d, e23s, half, 1));
    r.published_gap = 3 - 1;
  } else {
    r.claims.push_back(check_claim("D4[2_1]", e21d, e21s, half, 12));
    r.claims.push_back(check_claim("D4[2_3]", e23d, e23s, half, 4));
    r.published_gap = 12 - 4;
  }
  r.exponent_gap = e21d.low_exp - e23d.low_exp;
  r.gap_consistent = r.exponent_gap == r.published_gap;
  return r;
}

Json report_json(const DegreeReport& r) {
  Json j;
  j["case"] = r.which == DegreeCase::TwistedE6 ? "twistedE6" : "E8_D4";
  Json evals = Json::array();
  for (const auto& e : r.evaluations) {
    Json ej;
    ej["rep"] = e.rep;
    ej["substitution"] = "u->q^" + std::to_string(e.a) + ", v->q^" + std::to_string(e.b);
    ej["lowest_term"] = e.low_coeff.frac_str() + " * q^" + std::to_string(e.low_exp);
    ej["reduced"] = e.reduced;
    evals.push_back(ej);
  }
  j["evaluations"] = evals;
  Json claims = Json::array();
  for (const auto& c : r.claims) {
    Json cj;
    cj["unipotent_character"] = c.unip_label;
    cj["published_leading_term"] = c.published_coeff.frac_str() + " * q^" +
                                   std::to_string(c.published_exp);
    cj["status"] = c.status;
    cj["note"] = c.note;
    claims.push_back(cj);
  }
  j["claims"] = claims;
  j["exponent_gap"] = r.exponent_gap;
  j["published_gap"] = r.published_gap;
  j["gap_consistent"] = r.gap_consistent;
  return j;
}

}  // namespace f4l
