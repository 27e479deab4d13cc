#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "f4l/f4chars.hpp"
#include "f4l/hecke.hpp"
#include "f4l/poly.hpp"

namespace f4l {

/// Carter-style name phi_{d,b} with an optional prime mark (0, 1 or 2).
struct CarterLabel {
  int d = 0;
  int b = 0;
  int primes = 0;

  std::string str() const;    // phi{d,b}'', ASCII
  std::string latex() const;  // \phi_{d,b}''
  friend bool operator==(const CarterLabel&, const CarterLabel&) = default;
};

/// One row of the reference dataset for Irr(W(F4)): Kondo name, Carter name,
/// a-invariant, and the values on the classes of s1 (= s2), s3 (= s4) and
/// s2 s3. The prime marks are dataset facts; (d, b) are recomputed.
struct LabelRow {
  const char* kondo;
  int d;
  int b;
  int primes;
  int a_value;
  int val_da;
  int val_tt;
  int val_at;
};

std::span<const LabelRow> label_dataset();
const LabelRow& dataset_row(const std::string& kondo);

/// chi_{n,j} alias generated from the Kondo name.
std::string alias_chi(const std::string& kondo);

/// The two ways of matching the abstract generators d, a, tau, tau*sigma
/// with the simple reflections: (C) puts d, a on the long roots s1, s2;
/// (L) puts them on the short roots s4, s3.
enum class Convention { C, L };
Convention convention_from_string(const std::string& s);

/// Permutation of the 25 Kondo labels induced by the diagram flip
/// s1 <-> s4, s2 <-> s3, computed by precomposing each character with the
/// flip and re-identifying it in the table. Throws unless it equals the
/// seven documented swaps.
std::map<std::string, std::string> iota_on_kondo(const F4CharTable& t);

/// Labels of the concrete characters under a convention: under (C) the
/// internal names stand; under (L) labels are precomposed with iota.
/// Maps internal record name -> (kondo label, carter label).
std::map<std::string, std::pair<std::string, CarterLabel>> assign_labels(const F4CharTable& t,
                                                                         Convention c);

/// Conversion scheme between the Carter-style names as used on the
/// Lusztig-convention side and the Kondo names, in the documented row
/// order; validated against the embedded reference rows.
std::vector<std::pair<CarterLabel, std::string>> conversion_table(const F4CharTable& t);

/// The four-element family of unipotent characters containing [4_2]: pairs
/// (x, sigma) on the Lusztig side and the matching Carter-side names.
struct FamilyMember {
  std::string unip_label;   // [4_2], [2_1], [2_3], B2[1]
  std::string pair_label;   // (1,1), (g2,1), (1,eps), (g2,eps)
  std::string carter_name;  // phi{4,1}, phi{2,4}'', phi{2,4}', B2,1
};
std::array<FamilyMember, 4> four_element_family();

/// Note attached to the family: the primes on phi{2,4} in the historical
/// Carter-side table must be exchanged to match the conversion scheme.
std::string family_note();

/// Documentation note on the G2 degree-1 character names eps_c/eps_l used
/// by Spaltenstein: his long/short convention is opposite to the diagrams
/// computed here, so no automated mapping is attempted.
std::string g2_naming_note();

// ---- degree reports ----

enum class DegreeCase { TwistedE6, E8_D4 };

struct DegreeEvaluation {
  std::string rep;  // "2_1" or "2_3"
  int a = 0, b = 0;  // substitution u -> q^a, v -> q^b
  UniQuot reduced;
  Rational low_coeff;
  int low_exp = 0;
};

struct ClaimCheck {
  std::string unip_label;
  Rational published_coeff;
  int published_exp = 0;
  std::string status;  // confirmed | coefficient-discrepancy | assignment-dependent
  std::string note;
};

struct DegreeReport {
  DegreeCase which;
  std::vector<DegreeEvaluation> evaluations;
  std::vector<ClaimCheck> claims;
  int exponent_gap = 0;           // gap of the two direct lowest terms
  int published_gap = 0;          // gap of the two published leading terms
  bool gap_consistent = false;
};

/// Evaluate the generic degrees of 2_1 and 2_3 under both parameter
/// assignments for the requested series and compare the lowest terms with
/// the published leading terms. Discrepancies are report content.
DegreeReport degree_report(DegreeCase which, const GenericDegree& d21, const GenericDegree& d23);

Json report_json(const DegreeReport& r);

}  // namespace f4l
