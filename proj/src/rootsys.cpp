#include "f4l/rootsys.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

namespace f4l {

std::string to_string(Type t) {
  switch (t) {
    case Type::A1: return "A1";
    case Type::B2: return "B2";
    case Type::G2: return "G2";
    case Type::D4: return "D4";
    case Type::F4: return "F4";
    case Type::E6: return "E6";
    case Type::E7: return "E7";
    case Type::E8: return "E8";
  }
  throw std::logic_error("bad Type");
}

Type type_from_string(std::string_view s) {
  if (s == "A1") return Type::A1;
  if (s == "B2") return Type::B2;
  if (s == "G2") return Type::G2;
  if (s == "D4") return Type::D4;
  if (s == "F4") return Type::F4;
  if (s == "E6") return Type::E6;
  if (s == "E7") return Type::E7;
  if (s == "E8") return Type::E8;
  throw std::invalid_argument("unsupported type: " + std::string(s));
}

std::string to_string(LengthClass c) {
  switch (c) {
    case LengthClass::Long: return "long";
    case LengthClass::Short: return "short";
    case LengthClass::SimplyLaced: return "simply_laced";
  }
  throw std::logic_error("bad LengthClass");
}

namespace {

struct TypeSpec {
  Type name;
  int rank;
  std::vector<int> sq;                        // squared lengths, short = 1
  std::vector<std::pair<int, int>> edges;     // 0-based adjacency
  std::vector<int> degrees;
};

const TypeSpec& spec_for(Type t) {
  static const std::array<TypeSpec, 8> specs = {{
      {Type::A1, 1, {1}, {}, {2}},
      {Type::B2, 2, {2, 1}, {{0, 1}}, {2, 4}},
      {Type::G2, 2, {1, 3}, {{0, 1}}, {2, 6}},
      {Type::D4, 4, {1, 1, 1, 1}, {{0, 1}, {1, 2}, {1, 3}}, {2, 4, 4, 6}},
      {Type::F4, 4, {2, 2, 1, 1}, {{0, 1}, {1, 2}, {2, 3}}, {2, 6, 8, 12}},
      {Type::E6, 6, {1, 1, 1, 1, 1, 1},
       {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}, {2, 5, 6, 8, 9, 12}},
      {Type::E7, 7, {1, 1, 1, 1, 1, 1, 1},
       {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {5, 6}}, {2, 6, 8, 10, 12, 14, 18}},
      {Type::E8, 8, {1, 1, 1, 1, 1, 1, 1, 1},
       {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {5, 6}, {6, 7}},
       {2, 8, 12, 14, 18, 20, 24, 30}},
  }};
  for (const auto& s : specs)
    if (s.name == t) return s;
  throw std::logic_error("bad Type");
}

AmbientData make_ambient(Type t) {
  const TypeSpec& s = spec_for(t);
  AmbientData d;
  d.name = t;
  const int n = s.rank;
  d.cartan = Eigen::MatrixXi::Zero(n, n);
  d.sq_length = Eigen::VectorXi(n);
  d.symmetrizer = Eigen::VectorXi(n);
  int max_sq = 1;
  for (int i = 0; i < n; ++i) {
    d.cartan(i, i) = 2;
    d.sq_length(i) = s.sq[i];
    max_sq = std::max(max_sq, s.sq[i]);
  }
  // Adjacent simple roots meet at the obtuse angle fixed by their lengths:
  // 2(a_i, a_j) = -max(sq_i, sq_j).
  for (auto [i, j] : s.edges) {
    const int m = std::max(s.sq[i], s.sq[j]);
    d.cartan(i, j) = -m / s.sq[j];
    d.cartan(j, i) = -m / s.sq[i];
  }
  for (int i = 0; i < n; ++i) d.symmetrizer(i) = max_sq / s.sq[i];
  for (int i = 0; i < n; ++i) d.node_names.push_back("a" + std::to_string(i + 1));
  d.invariant_degrees = s.degrees;
  return d;
}

}  // namespace

const AmbientData& ambient(Type t) {
  static const std::array<AmbientData, 8> all = {
      make_ambient(Type::A1), make_ambient(Type::B2), make_ambient(Type::G2),
      make_ambient(Type::D4), make_ambient(Type::F4), make_ambient(Type::E6),
      make_ambient(Type::E7), make_ambient(Type::E8)};
  for (const auto& d : all)
    if (d.name == t) return d;
  throw std::logic_error("bad Type");
}

Eigen::VectorXi RootSystem::reflect(int i, Eigen::VectorXi v) const {
  int a = 0;
  for (int j = 0; j < rank(); ++j) a += data_->cartan(j, i) * v(j);
  v(i) -= a;
  return v;
}

RootSystem RootSystem::build(Type t) {
  RootSystem sys;
  sys.data_ = &ambient(t);
  const int n = sys.rank();
  sys.dgram_ = sys.data_->cartan * sys.data_->sq_length.asDiagonal();
  if (sys.dgram_ != sys.dgram_.transpose())
    throw std::logic_error("root data: Gram matrix not symmetric");

  // Orbit closure of the simple roots under the simple reflections.
  std::map<std::vector<int>, int> seen;
  std::deque<Eigen::VectorXi> queue;
  auto key = [](const Eigen::VectorXi& v) {
    return std::vector<int>(v.data(), v.data() + v.size());
  };
  std::vector<Eigen::VectorXi> found;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e(i) = 1;
    seen.emplace(key(e), 0);
    queue.push_back(e);
    found.push_back(e);
  }
  while (!queue.empty()) {
    Eigen::VectorXi v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXi w = sys.reflect(i, v);
      if (seen.emplace(key(w), 0).second) {
        queue.push_back(w);
        found.push_back(w);
      }
    }
  }

  // Positive roots first, sorted by (height, lex); negatives mirrored so
  // that negate() is an index shift.
  std::vector<Eigen::VectorXi> pos;
  for (const auto& v : found) {
    const bool all_nonneg = (v.array() >= 0).all();
    const bool all_nonpos = (v.array() <= 0).all();
    if (!all_nonneg && !all_nonpos) throw std::logic_error("root with mixed signs");
    if (all_nonneg) pos.push_back(v);
  }
  if (2 * pos.size() != found.size()) throw std::logic_error("root negation mismatch");
  std::sort(pos.begin(), pos.end(), [&key](const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
    const int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return key(a) < key(b);
  });
  sys.npos_ = static_cast<int>(pos.size());
  sys.roots_ = pos;
  for (const auto& v : pos) sys.roots_.push_back(-v);
  for (int i = 0; i < sys.size(); ++i) sys.index_.emplace(key(sys.roots_[i]), i);

  sys.simple_idx_.resize(n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e(i) = 1;
    sys.simple_idx_[i] = sys.index_.at(key(e));
  }

  sys.perm_.assign(n, std::vector<int32_t>(sys.size()));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < sys.size(); ++r) {
      const int img = sys.index_of(sys.reflect(i, sys.roots_[r]));
      if (img < 0) throw std::logic_error("reflection does not permute the roots");
      sys.perm_[i][r] = img;
    }
  return sys;
}

int RootSystem::index_of(const Eigen::VectorXi& v) const {
  auto it = index_.find(std::vector<int>(v.data(), v.data() + v.size()));
  return it == index_.end() ? -1 : it->second;
}

Rational RootSystem::inner(const Eigen::VectorXi& x, const Eigen::VectorXi& y) const {
  long long acc = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) acc += static_cast<long long>(x(i)) * dgram_(i, j) * y(j);
  return Rational(acc, 2);
}

Rational RootSystem::inner(const VectorQ& x, const VectorQ& y) const {
  Rational acc(0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) acc += x(i) * Rational(dgram_(i, j)) * y(j);
  return acc / Rational(2);
}

Rational RootSystem::sq_length(int idx) const {
  return inner(roots_[idx], roots_[idx]);
}

LengthClass RootSystem::length_class(int idx) const {
  const int max_sq = data_->sq_length.maxCoeff();
  if (max_sq == 1) return LengthClass::SimplyLaced;
  return sq_length(idx) == Rational(max_sq) ? LengthClass::Long : LengthClass::Short;
}

RootString RootSystem::root_string(int alpha_idx, int beta_idx) const {
  if (alpha_idx == beta_idx || alpha_idx == negate(beta_idx))
    throw std::invalid_argument("root_string: beta proportional to alpha");
  const Eigen::VectorXi& a = roots_[alpha_idx];
  const Eigen::VectorXi& b = roots_[beta_idx];
  RootString s{alpha_idx, beta_idx, 0, 0};
  while (is_root(b - (s.p + 1) * a)) ++s.p;
  while (is_root(b + (s.q + 1) * a)) ++s.q;
  return s;
}

}  // namespace f4l
