#include "f4l/f4chars.hpp"

#include <algorithm>
#include <stdexcept>

#include "f4l/hecke.hpp"

namespace f4l {

namespace {

MatrixQ word_matrix(const std::array<MatrixQ, 4>& gens, const std::vector<int>& word, int dim) {
  MatrixQ m = MatrixQ::Identity(dim, dim);
  for (int i : word) m = (m * gens[i]).eval();
  return m;
}

long long trace_ll(const MatrixQ& m) {
  Rational t(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return to_long(t);
}

}  // namespace

const CharacterRecord& F4CharTable::by_kondo(const std::string& name) const {
  const int i = index_by_kondo(name);
  if (i < 0) throw std::invalid_argument("no character named " + name);
  return records_[i];
}

int F4CharTable::index_by_kondo(const std::string& name) const {
  for (std::size_t i = 0; i < records_.size(); ++i)
    if (records_[i].kondo == name) return static_cast<int>(i);
  return -1;
}

int F4CharTable::index_by_values(const std::vector<long long>& values) const {
  for (std::size_t i = 0; i < records_.size(); ++i)
    if (records_[i].values == values) return static_cast<int>(i);
  return -1;
}

int F4CharTable::class_of_word(std::initializer_list<int> word) const {
  return classes_.class_of[en_.index_of(en_.group().from_word(word))];
}

int F4CharTable::class_of(const GroupElement& g) const {
  return classes_.class_of[en_.index_of(g)];
}

Rational F4CharTable::inner_product(const std::vector<long long>& x,
                                    const std::vector<long long>& y) const {
  Rational acc(0);
  for (int c = 0; c < classes_.num_classes(); ++c)
    acc += Rational(static_cast<long long>(classes_.sizes[c]) * x[c] * y[c]);
  return acc / Rational(en_.size());
}

std::vector<long long> F4CharTable::tensor(const std::vector<long long>& x,
                                           const std::vector<long long>& y) const {
  std::vector<long long> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * y[i];
  return r;
}

std::vector<long long> F4CharTable::sym2(const std::vector<long long>& x) const {
  std::vector<long long> r(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) {
    const long long t = x[c] * x[c] + x[classes_.power_map[c]];
    if (t % 2 != 0) throw std::logic_error("sym2: non-integral value");
    r[c] = t / 2;
  }
  return r;
}

std::vector<long long> F4CharTable::lambda2(const std::vector<long long>& x) const {
  std::vector<long long> r(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) {
    const long long t = x[c] * x[c] - x[classes_.power_map[c]];
    if (t % 2 != 0) throw std::logic_error("lambda2: non-integral value");
    r[c] = t / 2;
  }
  return r;
}

UniPoly F4CharTable::fake_degree(const std::vector<long long>& values) const {
  // Sum over classes of |C| chi(C) / det(1 - q rho(C)), multiplied by
  // prod_i (1 - q^{d_i}) / |W|; the quotient must be a polynomial.
  UniPoly den(1);
  for (int c = 0; c < classes_.num_classes(); ++c) den = lcm(den, class_det_[c]);
  UniPoly num;
  for (int c = 0; c < classes_.num_classes(); ++c)
    num += Rational(static_cast<long long>(classes_.sizes[c]) * values[c]) *
           exact_div(den, class_det_[c]);
  UniPoly coinv(1);
  for (int d : en_.group().roots().data().invariant_degrees)
    coinv *= UniPoly(1) - UniPoly::monomial(d);
  UniPoly total = coinv * num;
  const UniPoly divisor = Rational(en_.size()) * den;
  auto [q, r] = divmod(total, divisor);
  if (!r.is_zero()) throw std::logic_error("Molien identity violated");
  return q;
}

F4CharTable F4CharTable::build() {
  F4CharTable t;
  t.en_ = Enumeration::build(WeylGroup(RootSystem::build(Type::F4)));
  t.classes_ = conjugacy_classes(t.en_);
  const int nc = t.classes_.num_classes();
  const WeylGroup& g = t.en_.group();

  t.class_da_ = t.class_of_word({0});
  t.class_tt_ = t.class_of_word({2});
  t.class_at_ = t.class_of_word({1, 2});

  // Reflection representation on simple-root coordinates.
  for (int i = 0; i < 4; ++i) {
    MatrixQ m = MatrixQ::Identity(4, 4);
    for (int jcol = 0; jcol < 4; ++jcol) {
      Eigen::VectorXi e = Eigen::VectorXi::Zero(4);
      e(jcol) = 1;
      const Eigen::VectorXi img = g.roots().reflect(i, e);
      for (int r = 0; r < 4; ++r) m(r, jcol) = Rational(img(r));
    }
    t.refl_.matrices[i] = m;
  }

  // Per-class data from the representative: reflection trace and
  // det(1 - q rho), checked to be class functions on a second member.
  t.class_det_.resize(nc);
  t.refl_traces_.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const auto& word = *t.en_.at(t.classes_.reps[c]).word;
    const MatrixQ m = word_matrix(t.refl_.matrices, word, 4);
    t.refl_traces_[c] = trace_ll(m);
    Matrix<UniPoly> a(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int s = 0; s < 4; ++s) {
        UniPoly e = r == s ? UniPoly(1) : UniPoly();
        e -= UniPoly::monomial(1, m(r, s));
        a(r, s) = e;
      }
    t.class_det_[c] = ring_det(a);
  }

  // Linear characters: sgn and the parity of v-letters.
  std::vector<long long> triv(nc, 1), sgn(nc), eps_v(nc), eps_u(nc);
  for (int c = 0; c < nc; ++c) {
    const auto& word = *t.en_.at(t.classes_.reps[c]).word;
    int lu = 0, lv = 0;
    for (int i : word) (i < 2 ? lu : lv) += 1;
    sgn[c] = (lu + lv) % 2 == 0 ? 1 : -1;
    eps_v[c] = lv % 2 == 0 ? 1 : -1;
    eps_u[c] = lu % 2 == 0 ? 1 : -1;
  }

  std::vector<long long> refl = t.refl_traces_;

  // 2_1 and 2_3 from the Hecke matrices at (u,v) = (1,1).
  auto hecke_char = [&](const HeckeRep& rep) {
    const std::array<MatrixQ, 4> gens = specialize_at_one(rep);
    std::vector<long long> vals(nc);
    for (int c = 0; c < nc; ++c)
      vals[c] = trace_ll(word_matrix(gens, *t.en_.at(t.classes_.reps[c]).word, rep.dim));
    return vals;
  };
  const std::vector<long long> two1 = hecke_char(rep_sigma());
  const std::vector<long long> two3 = hecke_char(rep_sigma_prime());

  auto push = [&](const std::string& kondo, std::vector<long long> vals) {
    CharacterRecord r;
    r.kondo = kondo;
    r.degree = vals[0];
    r.values = std::move(vals);
    t.records_.push_back(std::move(r));
  };

  push("1_1", triv);
  push("1_2", eps_v);
  push("1_3", eps_u);
  push("1_4", sgn);
  push("2_1", two1);
  push("2_2", t.tensor(two1, sgn));
  push("2_3", two3);
  push("2_4", t.tensor(two3, sgn));
  push("4_1", t.tensor(two1, two3));
  push("4_2", refl);
  push("4_3", t.tensor(refl, eps_v));
  push("4_4", t.tensor(refl, eps_u));
  push("4_5", t.tensor(refl, sgn));

  std::vector<long long> six2 = t.lambda2(refl);
  std::vector<long long> six1 = t.tensor(six2, eps_v);
  if (six1 != t.tensor(six2, eps_u))
    throw std::logic_error("recipe broken: 6_2 x 1_2 differs from 6_2 x 1_3");
  push("6_1", six1);
  push("6_2", six2);

  std::vector<long long> nine1 = t.sym2(refl);
  for (auto& x : nine1) /* subtract the trivial character */ x -= 1;
  push("8_1", t.tensor(refl, two1));
  push("8_2", t.tensor(t.tensor(refl, two1), sgn));
  push("8_3", t.tensor(refl, two3));
  push("8_4", t.tensor(t.tensor(refl, two3), sgn));
  push("9_1", nine1);
  push("9_2", t.tensor(nine1, eps_v));
  push("9_3", t.tensor(nine1, eps_u));
  push("9_4", t.tensor(nine1, sgn));
  push("12_1", t.tensor(six1, two1));
  push("16_1", t.tensor(t.tensor(two1, two3), refl));

  if (t.records_.size() != 25) throw std::logic_error("recipe broken: expected 25 characters");
  for (const auto& r : t.records_) {
    if (t.inner_product(r.values, r.values) != Rational(1))
      throw std::logic_error("recipe broken: " + r.kondo + " is not irreducible");
  }
  for (std::size_t i = 0; i < t.records_.size(); ++i)
    for (std::size_t j = i + 1; j < t.records_.size(); ++j)
      if (t.records_[i].values == t.records_[j].values)
        throw std::logic_error("recipe broken: duplicate characters " + t.records_[i].kondo +
                               ", " + t.records_[j].kondo);

  for (auto& r : t.records_) {
    r.fake_degree = t.fake_degree(r.values);
    r.b_invariant = r.fake_degree.low_exp();
    for (const auto& [e, c] : r.fake_degree.terms())
      if (!c.is_integer() || c.sign() < 0)
        throw std::logic_error("Molien identity violated: non-positive-integral fake degree");
  }
  return t;
}

const F4CharTable& f4_table() {
  static const F4CharTable table = F4CharTable::build();
  return table;
}

}  // namespace f4l
