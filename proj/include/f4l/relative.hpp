#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f4l/poly.hpp"
#include "f4l/weylgrp.hpp"

namespace f4l {

/// Outcome of the commuting-reflection criterion for a pair of non-Levi
/// simple roots alpha, beta: if alpha+beta is a root, 2*alpha+beta is not,
/// and s_alpha commutes with the whole Levi parabolic, then the projected
/// beta is not longer than the projected alpha and, whenever the weight
/// function is defined, lambda(alpha) = 1.
struct WeightOneVerdict {
  int alpha = -1;
  int beta = -1;
  bool sum_is_root = false;
  bool double_sum_not_root = false;
  bool commutes_with_levi = false;

  bool applicable() const { return sum_is_root && double_sum_not_root && commutes_with_levi; }
};

WeightOneVerdict weight_one_criterion(const WeylGroup& g, std::span<const int> levi, int alpha,
                                      int beta);

enum class WeightProvenance { Criterion, Published, Undefined };
std::string to_string(WeightProvenance p);

struct WeightInfo {
  int value = 0;  // meaningful only when provenance != Undefined
  WeightProvenance provenance = WeightProvenance::Undefined;
};

/// Generator of the stabiliser of the Levi subset attached to a non-Levi
/// simple root: the product of the longest elements of the parabolic on
/// levi + {alpha} and of the Levi parabolic. Carries a reduced word.
GroupElement hat_generator(const WeylGroup& g, std::span<const int> levi, int alpha);

/// Relative root system of an ambient type with respect to a subset of the
/// simple roots: hat generators, orthogonal projections of the remaining
/// simple roots, the relative Cartan matrix, length classes and weights.
struct RelativeDatum {
  Type ambient;
  std::vector<int> levi;                  // ascending
  std::vector<int> hat_nodes;             // ascending complement
  std::vector<int> display_order;         // hat nodes in diagram chain order
  std::map<int, GroupElement> hat_gen;
  std::map<int, VectorQ> projected;
  Eigen::MatrixXi rel_cartan;             // indexed by display_order
  Type rel_type;
  std::map<int, LengthClass> lengths;
  std::map<int, WeightInfo> weights;
  int rel_root_count = 0;
  std::vector<std::string> verified;      // axioms checked during construction
};

RelativeDatum relative_system(Type ambient, std::vector<int> levi);

/// Pairwise orders of products of hat generators, indexed by display_order.
Eigen::MatrixXi product_order_table(const RelativeDatum& d);

/// Folding of E6 by the automorphism alpha -> -w0(alpha): orbits of simple
/// roots, the longest elements along the orbits as generators of the fixed
/// subgroup, orbit-average node vectors, and orbit weights given by the
/// lengths of those generators.
struct FoldingDatum {
  std::vector<std::vector<int>> orbits;   // display order
  std::vector<GroupElement> orbit_gen;
  std::vector<VectorQ> nodes;             // orbit averages
  std::vector<int> simple_image;          // the induced diagram permutation
  Eigen::MatrixXi rel_cartan;
  Type rel_type = Type::F4;
  std::vector<LengthClass> lengths;
  std::vector<int> weights;
  int rel_root_count = 0;
  std::vector<std::string> verified;      // axioms checked during construction
};

FoldingDatum fold_twisted_e6();

Json datum_json(const RelativeDatum& d);
Json datum_json(const FoldingDatum& d);
std::string datum_text(const RelativeDatum& d);
std::string datum_text(const FoldingDatum& d);

/// One verified configuration: the computed record next to the expected one.
struct CaseOutcome {
  std::string name;
  bool pass = false;
  Json expected;
  Json actual;
};

/// The six studied configurations: F4 over B2, E7 over A1^3, E8 over D4,
/// E6 over A2^2, E8 over E6, and the folded twisted E6.
std::vector<CaseOutcome> case_studies();

/// Parse "a2,a3" (or "2,3") into 0-based simple indices.
std::vector<int> parse_levi(const std::string& s, int rank);

}  // namespace f4l
