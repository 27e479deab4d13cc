#pragma once

#include <array>
#include <string>
#include <vector>

#include "f4l/linalg.hpp"
#include "f4l/poly.hpp"
#include "f4l/weylgrp.hpp"

namespace f4l {

/// Matrix representation of the generic two-parameter Hecke algebra of type
/// F4. Generator images are indexed by the simple reflections s1..s4 under
/// the internal identification d = s1, a = s2, tau = s3, tau*sigma = s4;
/// s1, s2 carry the parameter u, s3, s4 carry v.
struct HeckeRep {
  std::string name;
  int dim;
  std::array<MatrixP, 4> gen;
};

/// Parameter of the generic quadratic relation T^2 = p T_1 + (p-1) T
/// carried by generator i (u on s1, s2; v on s3, s4).
BiPoly hecke_parameter(int i);

/// Throws std::logic_error if a braid or quadratic relation fails.
void check_relations(const HeckeRep& rep);

/// The irreducible two-dimensional representations specialising to the
/// characters 2_1 and 2_3 at (u,v) = (1,1).
HeckeRep rep_sigma();
HeckeRep rep_sigma_prime();

/// One-dimensional representation: u-generators map to u or -1, and
/// v-generators map to v or -1. (param,param) is ind and specialises to
/// 1_1; (param,-1) to 1_2; (-1,param) to 1_3; (-1,-1) to 1_4.
HeckeRep rep_onedim(bool u_param, bool v_param);

/// All six representations constructed here: 1_1, 1_2, 1_3, 1_4, 2_1, 2_3.
std::vector<HeckeRep> constructed_reps();
const HeckeRep& rep_by_name(const std::vector<HeckeRep>& reps, const std::string& name);

/// Trace of the image of T_w along the element's reduced word.
BiPoly char_on(const HeckeRep& rep, const GroupElement& w);

/// ind(T_w) = u^{#u-letters} v^{#v-letters} as a monomial.
BiPoly ind_monomial(const std::vector<int>& word);

/// Two-variable Poincare polynomial: sum of ind(T_w) over the group.
BiPoly poincare_polynomial(const Enumeration& en);

struct GenericDegree {
  std::string rep;
  int dim = 0;
  BiFrac value;    // dim * poincare / schur
  BiPoly schur;    // sum of ind(T_w)^{-1} tr(T_w) tr(T_{w^{-1}})
  BiPoly poincare;
};

GenericDegree generic_degree(const HeckeRep& rep, const Enumeration& en);

/// Lowest exponent of the equal-parameter specialisation (u,v) -> (q,q).
int a_invariant(const GenericDegree& gd);

/// Substitute q -> -q, then flip the overall sign if needed so the lowest
/// term is positive.
UniPoly ennola(const UniPoly& p);

/// Closed form of the generic degree for 2_1 as printed in the standard
/// tables: v^3 (v+1)(uv^2+1)(u^2 v^2+1)(u^3 v^3+1) / ((u^3+1)(u+v)(u^2+v)).
BiFrac published_degree_2_1();

/// Specialise all generator images at (u,v) = (1,1).
std::array<MatrixQ, 4> specialize_at_one(const HeckeRep& rep);

/// Generic degrees for all six constructed representations of W(F4),
/// computed once per process.
const std::vector<GenericDegree>& f4_generic_degrees();
const GenericDegree& degree_by_name(const std::string& name);

}  // namespace f4l
