#pragma once

#include <string>
#include <vector>

#include "f4l/linalg.hpp"
#include "f4l/poly.hpp"
#include "f4l/weylgrp.hpp"

namespace f4l {

/// An irreducible character of W(F4) with exact integer values per
/// conjugacy class, in Kondo's naming n_j.
struct CharacterRecord {
  std::string kondo;
  std::vector<long long> values;  // indexed by class
  long long degree = 0;
  int b_invariant = 0;  // lowest exponent of the fake degree
  UniPoly fake_degree;
};

/// The reflection representation: exact matrices of the simple reflections
/// acting on simple-root coordinates.
struct ReflectionRep {
  std::array<MatrixQ, 4> matrices;
};

/// Character table of W(F4): enumeration, conjugacy classes, the 25
/// irreducible characters built by explicit constructions (tensoring with
/// linear characters, symmetric/exterior squares of the reflection
/// character, and the Hecke specialisations for 2_1 and 2_3), fake degrees
/// and b-invariants.
class F4CharTable {
 public:
  static F4CharTable build();

  const Enumeration& enumeration() const { return en_; }
  const ClassData& classes() const { return classes_; }
  const std::vector<CharacterRecord>& records() const { return records_; }
  const ReflectionRep& reflection_rep() const { return refl_; }

  const CharacterRecord& by_kondo(const std::string& name) const;
  int index_by_kondo(const std::string& name) const;
  /// Index of the record with the given values, or -1.
  int index_by_values(const std::vector<long long>& values) const;

  int class_of_word(std::initializer_list<int> word) const;
  int class_of(const GroupElement& g) const;

  /// Classes carrying the printed table columns: the class of s1 (= s2),
  /// of s3 (= s4), and of s2 s3.
  int class_da() const { return class_da_; }
  int class_tt() const { return class_tt_; }
  int class_at() const { return class_at_; }

  Rational inner_product(const std::vector<long long>& x, const std::vector<long long>& y) const;
  std::vector<long long> tensor(const std::vector<long long>& x,
                                const std::vector<long long>& y) const;
  std::vector<long long> sym2(const std::vector<long long>& x) const;
  std::vector<long long> lambda2(const std::vector<long long>& x) const;

  /// Graded multiplicity of the character in the coinvariant algebra,
  /// computed from the Molien sum over conjugacy classes. Throws if the
  /// result is not a polynomial.
  UniPoly fake_degree(const std::vector<long long>& values) const;

  /// det(1 - q * rho(w)) for a representative of each class.
  const std::vector<UniPoly>& class_det() const { return class_det_; }

  /// Trace of rho(w) on the reflection representation, per class.
  const std::vector<long long>& reflection_traces() const { return refl_traces_; }

 private:
  Enumeration en_;
  ClassData classes_;
  ReflectionRep refl_;
  std::vector<UniPoly> class_det_;
  std::vector<long long> refl_traces_;
  std::vector<CharacterRecord> records_;
  int class_da_ = -1, class_tt_ = -1, class_at_ = -1;

  F4CharTable() = default;
};

/// Shared instance, built once per process.
const F4CharTable& f4_table();

}  // namespace f4l
