#include "f4l/hecke.hpp"

#include <stdexcept>

#include "f4l/f4chars.hpp"

namespace f4l {

namespace {

MatrixP mat2(const BiPoly& a, const BiPoly& b, const BiPoly& c, const BiPoly& d) {
  MatrixP m(2, 2);
  m << a, b, c, d;
  return m;
}

bool mat_eq(const MatrixP& a, const MatrixP& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return false;
  return true;
}

MatrixP mat_pow_chain(const MatrixP& a, const MatrixP& b, int len) {
  // a b a b ... (len factors)
  MatrixP r = MatrixP::Identity(a.rows(), a.cols());
  for (int k = 0; k < len; ++k) r = (r * (k % 2 == 0 ? a : b)).eval();
  return r;
}

// Coxeter matrix of F4 under the internal identification.
int braid_order(int i, int j) {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  if (i == 0 && j == 1) return 3;
  if (i == 1 && j == 2) return 4;
  if (i == 2 && j == 3) return 3;
  return 2;
}

}  // namespace

BiPoly hecke_parameter(int i) { return i < 2 ? BiPoly::u() : BiPoly::v(); }

void check_relations(const HeckeRep& rep) {
  const int d = rep.dim;
  const MatrixP id = MatrixP::Identity(d, d);
  for (int i = 0; i < 4; ++i) {
    const BiPoly p = hecke_parameter(i);
    const MatrixP lhs = (rep.gen[i] * rep.gen[i]).eval();
    const MatrixP rhs = (id * p + rep.gen[i] * (p - BiPoly(1))).eval();
    if (!mat_eq(lhs, rhs))
      throw std::logic_error(rep.name + ": quadratic relation fails on generator " + std::to_string(i + 1));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const int m = braid_order(i, j);
      if (!mat_eq(mat_pow_chain(rep.gen[i], rep.gen[j], m),
                  mat_pow_chain(rep.gen[j], rep.gen[i], m)))
        throw std::logic_error(rep.name + ": braid relation fails on generators " +
                               std::to_string(i + 1) + "," + std::to_string(j + 1));
    }
}

HeckeRep rep_sigma() {
  const BiPoly u = BiPoly::u(), v = BiPoly::v();
  HeckeRep r{"2_1", 2, {}};
  r.gen[0] = mat2(u, 0, 0, u);
  r.gen[1] = mat2(u, 0, 0, u);
  r.gen[2] = mat2(-1, 1, 0, v);
  r.gen[3] = mat2(v, 0, v, -1);
  check_relations(r);
  return r;
}

HeckeRep rep_sigma_prime() {
  const BiPoly u = BiPoly::u(), v = BiPoly::v();
  HeckeRep r{"2_3", 2, {}};
  r.gen[0] = mat2(u, 0, u, -1);
  r.gen[1] = mat2(-1, 1, 0, u);
  r.gen[2] = mat2(v, 0, 0, v);
  r.gen[3] = mat2(v, 0, 0, v);
  check_relations(r);
  return r;
}

HeckeRep rep_onedim(bool u_param, bool v_param) {
  HeckeRep r{"", 1, {}};
  r.name = u_param ? (v_param ? "1_1" : "1_2") : (v_param ? "1_3" : "1_4");
  for (int i = 0; i < 4; ++i) {
    const bool param = i < 2 ? u_param : v_param;
    MatrixP m(1, 1);
    m(0, 0) = param ? hecke_parameter(i) : BiPoly(-1);
    r.gen[i] = m;
  }
  check_relations(r);
  return r;
}

std::vector<HeckeRep> constructed_reps() {
  return {rep_onedim(true, true), rep_onedim(true, false), rep_onedim(false, true),
          rep_onedim(false, false), rep_sigma(), rep_sigma_prime()};
}

const HeckeRep& rep_by_name(const std::vector<HeckeRep>& reps, const std::string& name) {
  for (const auto& r : reps)
    if (r.name == name) return r;
  throw std::invalid_argument("no constructed representation named " + name);
}

BiPoly char_on(const HeckeRep& rep, const GroupElement& w) {
  if (!w.word) throw std::invalid_argument("char_on: element carries no word");
  MatrixP m = MatrixP::Identity(rep.dim, rep.dim);
  for (int i : *w.word) m = (m * rep.gen[i]).eval();
  return m.trace();
}

BiPoly ind_monomial(const std::vector<int>& word) {
  int lu = 0, lv = 0;
  for (int i : word) (i < 2 ? lu : lv) += 1;
  return BiPoly::monomial(lu, lv);
}

BiPoly poincare_polynomial(const Enumeration& en) {
  BiPoly p;
  for (int idx = 0; idx < en.size(); ++idx) p += ind_monomial(*en.at(idx).word);
  return p;
}

GenericDegree generic_degree(const HeckeRep& rep, const Enumeration& en) {
  const int n = en.size();

  // Walk the BFS tree once, reusing the parent's matrix.
  std::vector<MatrixP> mats(n);
  std::vector<BiPoly> tr(n);
  mats[0] = MatrixP::Identity(rep.dim, rep.dim);
  tr[0] = mats[0].trace();
  for (int idx = 1; idx < n; ++idx) {
    mats[idx] = (mats[en.parent(idx)] * rep.gen[en.last_letter(idx)]).eval();
    tr[idx] = mats[idx].trace();
  }

  BiPoly schur;
  for (int idx = 0; idx < n; ++idx) {
    const int inv = en.inverse_of(idx);
    if (!(tr[idx] == tr[inv]))
      throw std::logic_error(rep.name + ": trace(T_w) != trace(T_{w^-1})");
    int lu = 0, lv = 0;
    for (int i : *en.at(idx).word) (i < 2 ? lu : lv) += 1;
    schur += BiPoly::monomial(-lu, -lv) * (tr[idx] * tr[inv]);
  }
  if (schur.is_zero()) throw std::logic_error(rep.name + ": zero Schur element");

  GenericDegree gd{rep.name, rep.dim,
                   BiFrac(BiPoly(rep.dim) * poincare_polynomial(en), schur),
                   schur, poincare_polynomial(en)};
  return gd;
}

int a_invariant(const GenericDegree& gd) {
  return lowest_term(specialize(gd.value, 1, 1)).second;
}

UniPoly ennola(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("ennola of zero polynomial");
  UniPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, e % 2 == 0 ? c : -c);
  if (lowest_term(r).first.sign() < 0) r = -r;
  return r;
}

BiFrac published_degree_2_1() {
  const BiPoly u = BiPoly::u(), v = BiPoly::v();
  const BiPoly num = BiPoly::monomial(0, 3) * (v + BiPoly(1)) * (u * v * v + BiPoly(1)) *
                     (u * u * v * v + BiPoly(1)) *
                     (u * u * u * v * v * v + BiPoly(1));
  const BiPoly den = (u * u * u + BiPoly(1)) * (u + v) * (u * u + v);
  return BiFrac(num, den);
}

std::array<MatrixQ, 4> specialize_at_one(const HeckeRep& rep) {
  std::array<MatrixQ, 4> out;
  for (int i = 0; i < 4; ++i) {
    MatrixQ m(rep.dim, rep.dim);
    for (int r = 0; r < rep.dim; ++r)
      for (int c = 0; c < rep.dim; ++c) m(r, c) = rep.gen[i](r, c).eval(Rational(1), Rational(1));
    out[i] = m;
  }
  return out;
}

const std::vector<GenericDegree>& f4_generic_degrees() {
  static const std::vector<GenericDegree> degrees = [] {
    const Enumeration& en = f4_table().enumeration();
    std::vector<GenericDegree> out;
    for (const HeckeRep& rep : constructed_reps()) out.push_back(generic_degree(rep, en));
    return out;
  }();
  return degrees;
}

const GenericDegree& degree_by_name(const std::string& name) {
  for (const auto& gd : f4_generic_degrees())
    if (gd.rep == name) return gd;
  throw std::invalid_argument("no generic degree for representation " + name);
}

}  // namespace f4l
