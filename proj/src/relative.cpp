#include "f4l/relative.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "f4l/linalg.hpp"

namespace f4l {

std::string to_string(WeightProvenance p) {
  switch (p) {
    case WeightProvenance::Criterion: return "criterion";
    case WeightProvenance::Published: return "published";
    case WeightProvenance::Undefined: return "undefined";
  }
  throw std::logic_error("bad WeightProvenance");
}

WeightOneVerdict weight_one_criterion(const WeylGroup& g, std::span<const int> levi, int alpha,
                                      int beta) {
  const RootSystem& sys = g.roots();
  for (int l : levi)
    if (alpha == l || beta == l)
      throw std::invalid_argument("weight_one_criterion: alpha, beta must avoid the Levi subset");
  if (alpha == beta) throw std::invalid_argument("weight_one_criterion: alpha == beta");

  WeightOneVerdict v;
  v.alpha = alpha;
  v.beta = beta;
  const int n = sys.rank();
  Eigen::VectorXi sum = Eigen::VectorXi::Zero(n);
  sum(alpha) += 1;
  sum(beta) += 1;
  v.sum_is_root = sys.is_root(sum);
  sum(alpha) += 1;
  v.double_sum_not_root = !sys.is_root(sum);
  // s_alpha commutes with the Levi parabolic iff alpha is orthogonal to it.
  v.commutes_with_levi = true;
  for (int l : levi) {
    Eigen::VectorXi ea = Eigen::VectorXi::Zero(n), el = Eigen::VectorXi::Zero(n);
    ea(alpha) = 1;
    el(l) = 1;
    if (!sys.inner(ea, el).is_zero()) v.commutes_with_levi = false;
  }
  return v;
}

GroupElement hat_generator(const WeylGroup& g, std::span<const int> levi, int alpha) {
  for (int l : levi)
    if (alpha == l) throw std::invalid_argument("hat_generator: alpha lies in the Levi subset");
  std::vector<int> ext(levi.begin(), levi.end());
  ext.push_back(alpha);
  const GroupElement prod = g.compose(g.longest_element(ext), g.longest_element(levi));
  GroupElement out = g.from_word(g.reduced_word(prod));
  if (out.perm != prod.perm) throw std::logic_error("hat_generator: word reduction changed the element");
  return out;
}

namespace {

// Orthogonal projection of a coordinate vector onto span(levi)^perp.
VectorQ project_off_levi(const RootSystem& sys, const std::vector<int>& levi, const VectorQ& v) {
  const int n = sys.rank();
  const int m = static_cast<int>(levi.size());
  if (m == 0) return v;
  MatrixQ gram(m, m);
  VectorQ rhs(m);
  auto basis = [&](int l) {
    VectorQ e = VectorQ::Constant(n, Rational(0));
    e(l) = Rational(1);
    return e;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) gram(i, j) = sys.inner(basis(levi[i]), basis(levi[j]));
    rhs(i) = sys.inner(basis(levi[i]), v);
  }
  const VectorQ c = solve_linear(gram, rhs);
  VectorQ out = v;
  for (int i = 0; i < m; ++i) out(levi[i]) -= c(i);
  return out;
}

std::vector<Rational> vec_key(const VectorQ& v) {
  return std::vector<Rational>(v.data(), v.data() + v.size());
}

int perm_order(const std::vector<int32_t>& p, int cap = 100) {
  std::vector<int32_t> cur = p;
  auto is_id = [](const std::vector<int32_t>& q) {
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != static_cast<int32_t>(i)) return false;
    return true;
  };
  for (int k = 1; k <= cap; ++k) {
    if (is_id(cur)) return k;
    std::vector<int32_t> nxt(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) nxt[i] = cur[p[i]];
    cur = nxt;
  }
  throw std::runtime_error("perm_order: cap exceeded");
}

// Orbit of the given vectors under the linear action of the generators.
std::vector<VectorQ> close_orbit(const WeylGroup& g, const std::vector<GroupElement>& gens,
                                 const std::vector<VectorQ>& seeds, std::size_t cap = 1000) {
  std::set<std::vector<Rational>> seen;
  std::vector<VectorQ> out;
  for (const auto& s : seeds)
    if (seen.insert(vec_key(s)).second) out.push_back(s);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& gen : gens) {
      VectorQ img = g.apply(gen, out[head]);
      if (seen.insert(vec_key(img)).second) {
        if (out.size() >= cap) throw std::runtime_error("relative closure exceeds bound");
        out.push_back(std::move(img));
      }
    }
  }
  return out;
}

// Cartan matrix used for diagram display order: long nodes listed first.
Eigen::MatrixXi display_cartan(Type t) {
  Eigen::MatrixXi m;
  switch (t) {
    case Type::F4:
      return ambient(Type::F4).cartan;
    case Type::B2:
      return ambient(Type::B2).cartan;
    case Type::G2: {
      m.resize(2, 2);
      m << 2, -3, -1, 2;
      return m;
    }
    default:
      throw std::logic_error("display_cartan: unsupported relative type");
  }
}

struct CaseConfig {
  Type ambient;
  std::vector<int> levi;
  bool lambda_defined;
  std::map<int, int> published;  // node -> weight
};

const std::vector<CaseConfig>& case_configs() {
  static const std::vector<CaseConfig> cfgs = {
      {Type::F4, {1, 2}, true, {{0, 3}, {3, 3}}},
      {Type::E7, {1, 4, 6}, false, {}},
      {Type::E8, {1, 2, 3, 4}, true, {{7, 1}, {6, 1}, {5, 4}, {0, 4}}},
      {Type::E6, {0, 2, 4, 5}, false, {}},
      {Type::E8, {0, 1, 2, 3, 4, 5}, true, {{7, 1}, {6, 9}}},
  };
  return cfgs;
}

const CaseConfig* find_config(Type ambient, const std::vector<int>& levi) {
  for (const auto& c : case_configs())
    if (c.ambient == ambient && c.levi == levi) return &c;
  return nullptr;
}

}  // namespace

RelativeDatum relative_system(Type ambient_t, std::vector<int> levi) {
  std::sort(levi.begin(), levi.end());
  levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
  const WeylGroup g(RootSystem::build(ambient_t));
  const RootSystem& sys = g.roots();
  const int n = sys.rank();
  for (int l : levi)
    if (l < 0 || l >= n) throw std::invalid_argument("relative_system: bad Levi index");

  RelativeDatum d;
  d.ambient = ambient_t;
  d.levi = levi;
  for (int i = 0; i < n; ++i)
    if (std::find(levi.begin(), levi.end(), i) == levi.end()) d.hat_nodes.push_back(i);
  if (d.hat_nodes.empty()) throw std::invalid_argument("relative_system: empty complement");

  // Hat generators: involutions stabilising the Levi subset.
  for (int a : d.hat_nodes) {
    GroupElement s = hat_generator(g, levi, a);
    if (!g.is_identity(g.compose(s, s)))
      throw std::logic_error("relative_system: hat generator is not an involution");
    std::set<int> levi_roots, image;
    for (int l : levi) {
      levi_roots.insert(sys.simple_root(l));
      image.insert(s.perm[sys.simple_root(l)]);
    }
    if (levi_roots != image)
      throw std::logic_error("relative_system: hat generator does not stabilise the Levi subset");
    d.hat_gen.emplace(a, std::move(s));
  }
  d.verified.push_back("hat generators are involutions");
  d.verified.push_back("hat generators stabilise the Levi subset setwise");

  // Projections of the non-Levi simple roots.
  for (int a : d.hat_nodes) {
    VectorQ e = VectorQ::Constant(n, Rational(0));
    e(a) = Rational(1);
    d.projected.emplace(a, project_off_levi(sys, levi, e));
  }

  // Relative Cartan matrix from exact inner products of the projections.
  const int r = static_cast<int>(d.hat_nodes.size());
  Eigen::MatrixXi cart(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const VectorQ& pa = d.projected.at(d.hat_nodes[i]);
      const VectorQ& pb = d.projected.at(d.hat_nodes[j]);
      const Rational c = Rational(2) * sys.inner(pa, pb) / sys.inner(pb, pb);
      if (!c.is_integer()) throw std::logic_error("relative_system: non-integral Cartan entry");
      cart(i, j) = static_cast<int>(to_long(c));
    }

  // Reflection axioms on the projected simples.
  for (int i = 0; i < r; ++i) {
    const int a = d.hat_nodes[i];
    const VectorQ& pa = d.projected.at(a);
    const VectorQ img = g.apply(d.hat_gen.at(a), pa);
    if (!(img == (-pa).eval())) throw std::logic_error("relative_system: hat(a) != -a on projections");
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const VectorQ& pb = d.projected.at(d.hat_nodes[j]);
      // hat_s_a(proj b) - proj b must be a nonnegative integer multiple of proj a.
      const VectorQ diff = (g.apply(d.hat_gen.at(a), pb) - pb).eval();
      const Rational mult = Rational(-cart(j, i));
      if (!(diff == (pa * mult).eval()))
        throw std::logic_error("relative_system: reflection axiom fails on projections");
      if (mult < Rational(0))
        throw std::logic_error("relative_system: negative reflection coefficient");
    }
  }
  d.verified.push_back("relative Cartan entries are integral");
  d.verified.push_back("hat_s_a(a) = -a on projections");
  d.verified.push_back("hat_s_a(b) - b is a nonnegative integer multiple of a");

  // Closure of the projected simples under the hat generators.
  std::vector<GroupElement> gens;
  std::vector<VectorQ> seeds;
  for (int a : d.hat_nodes) {
    gens.push_back(d.hat_gen.at(a));
    seeds.push_back(d.projected.at(a));
  }
  d.rel_root_count = static_cast<int>(close_orbit(g, gens, seeds).size());

  // Length classes and the squared-length ratio.
  std::vector<Rational> sq;
  for (int a : d.hat_nodes) sq.push_back(sys.inner(d.projected.at(a), d.projected.at(a)));
  const Rational mx = *std::max_element(sq.begin(), sq.end());
  const Rational mn = *std::min_element(sq.begin(), sq.end());
  const Rational ratio = mx / mn;
  if (mx == mn) throw std::logic_error("relative_system: expected two length classes");
  if (ratio != Rational(2) && ratio != Rational(3))
    throw std::logic_error("relative_system: squared-length ratio is neither 2 nor 3");
  for (int i = 0; i < r; ++i)
    d.lengths.emplace(d.hat_nodes[i], sq[i] == mx ? LengthClass::Long : LengthClass::Short);

  // Relative type and the diagram display order.
  if (r == 2)
    d.rel_type = ratio == Rational(3) ? Type::G2 : Type::B2;
  else if (r == 4)
    d.rel_type = Type::F4;
  else
    throw std::logic_error("relative_system: unsupported relative rank");

  const Eigen::MatrixXi target = display_cartan(d.rel_type);
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  bool matched = false;
  std::sort(order.begin(), order.end());
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j) ok = cart(order[i], order[j]) == target(i, j);
    if (ok) {
      matched = true;
      break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (!matched) throw std::logic_error("relative_system: Cartan matrix does not match the relative type");
  Eigen::MatrixXi cart_disp(r, r);
  for (int i = 0; i < r; ++i) {
    d.display_order.push_back(d.hat_nodes[order[i]]);
    for (int j = 0; j < r; ++j) cart_disp(i, j) = cart(order[i], order[j]);
  }
  d.rel_cartan = cart_disp;

  const int expected_count = d.rel_type == Type::F4 ? 48 : d.rel_type == Type::B2 ? 8 : 12;
  if (d.rel_root_count != expected_count)
    throw std::logic_error("relative_system: wrong relative root count");
  d.verified.push_back("squared-length ratio is exactly " + std::string(ratio == Rational(3) ? "3" : "2"));
  d.verified.push_back("Cartan matrix matches type " + to_string(d.rel_type) +
                       " and the closure has " + std::to_string(expected_count) + " roots");

  // Weights: the commuting-reflection criterion where it applies, published
  // values otherwise; undefined when no weight function is attached to the
  // configuration.
  const CaseConfig* cfg = find_config(ambient_t, levi);
  for (int a : d.hat_nodes) {
    WeightInfo w;
    if (cfg != nullptr && cfg->lambda_defined) {
      bool crit = false;
      for (int b : d.hat_nodes) {
        if (b == a) continue;
        if (weight_one_criterion(g, levi, a, b).applicable()) crit = true;
      }
      if (crit) {
        w = {1, WeightProvenance::Criterion};
        auto it = cfg->published.find(a);
        if (it != cfg->published.end() && it->second != 1)
          throw std::logic_error("relative_system: criterion contradicts the published weight");
      } else if (auto it = cfg->published.find(a); it != cfg->published.end()) {
        w = {it->second, WeightProvenance::Published};
      }
    }
    d.weights.emplace(a, w);
  }
  return d;
}

Eigen::MatrixXi product_order_table(const RelativeDatum& d) {
  const int r = static_cast<int>(d.display_order.size());
  Eigen::MatrixXi m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const auto& pi = d.hat_gen.at(d.display_order[i]).perm;
      const auto& pj = d.hat_gen.at(d.display_order[j]).perm;
      std::vector<int32_t> prod(pi.size());
      for (std::size_t k = 0; k < pi.size(); ++k) prod[k] = pi[pj[k]];
      m(i, j) = perm_order(prod);
    }
  return m;
}

FoldingDatum fold_twisted_e6() {
  const WeylGroup g(RootSystem::build(Type::E6));
  const RootSystem& sys = g.roots();
  const int n = 6;
  const std::vector<int> all{0, 1, 2, 3, 4, 5};
  const GroupElement w0 = g.longest_element(all);

  FoldingDatum d;
  // The automorphism alpha -> -w0(alpha) permutes the simple roots.
  d.simple_image.resize(n);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXi img = -sys.coords(w0.perm[sys.simple_root(i)]);
    int j = -1;
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
      e(k) = 1;
      if (img == e) j = k;
    }
    if (j < 0) throw std::logic_error("fold: -w0 does not permute the simple roots");
    d.simple_image[i] = j;
  }
  const std::vector<int> expected_image{5, 1, 4, 3, 2, 0};
  if (d.simple_image != expected_image)
    throw std::logic_error("fold: unexpected diagram permutation");

  d.orbits = {{1}, {3}, {2, 4}, {0, 5}};
  for (const auto& orb : d.orbits) {
    GroupElement e = g.longest_element(std::span<const int>(orb.data(), orb.size()));
    // The automorphism acts on W as conjugation by w0; orbit generators
    // must be fixed points.
    const GroupElement conj = g.compose(w0, g.compose(e, g.inverse(w0)));
    if (conj.perm != e.perm) throw std::logic_error("fold: generator not fixed by the automorphism");
    d.orbit_gen.push_back(std::move(e));
  }

  for (const auto& orb : d.orbits) {
    VectorQ v = VectorQ::Constant(n, Rational(0));
    for (int i : orb) v(i) = Rational(1, static_cast<long long>(orb.size()));
    d.nodes.push_back(v);
  }

  const int r = 4;
  d.rel_cartan.resize(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Rational c = Rational(2) * sys.inner(d.nodes[i], d.nodes[j]) / sys.inner(d.nodes[j], d.nodes[j]);
      if (!c.is_integer()) throw std::logic_error("fold: non-integral Cartan entry");
      d.rel_cartan(i, j) = static_cast<int>(to_long(c));
    }
  if (d.rel_cartan != ambient(Type::F4).cartan)
    throw std::logic_error("fold: folded Cartan matrix is not the F4 matrix");

  // Presentation check by product orders.
  Eigen::MatrixXi mexp(4, 4);
  mexp << 1, 3, 2, 2, 3, 1, 4, 2, 2, 4, 1, 3, 2, 2, 3, 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<int32_t> prod(d.orbit_gen[i].perm.size());
      for (std::size_t k = 0; k < prod.size(); ++k)
        prod[k] = d.orbit_gen[i].perm[d.orbit_gen[j].perm[k]];
      if (perm_order(prod) != mexp(i, j)) throw std::logic_error("fold: presentation check failed");
    }

  const Rational mx = sys.inner(d.nodes[0], d.nodes[0]);
  for (int i = 0; i < r; ++i) {
    const Rational sq = sys.inner(d.nodes[i], d.nodes[i]);
    d.lengths.push_back(sq == mx ? LengthClass::Long : LengthClass::Short);
    d.weights.push_back(g.length(d.orbit_gen[i]));
  }

  d.rel_root_count = static_cast<int>(close_orbit(g, d.orbit_gen, d.nodes).size());
  d.verified = {"the induced diagram permutation is a1<->a6, a3<->a5",
                "orbit generators are fixed by conjugation with w0",
                "orbit averages reproduce the F4 Cartan matrix",
                "product orders realise the F4 Coxeter matrix",
                "the orbit closure has " + std::to_string(d.rel_root_count) + " roots"};
  return d;
}

namespace {

std::string rational_vec_str(const VectorQ& v) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v(i).str();
  }
  return os.str();
}

Json word_json(const GroupElement& e) {
  Json j = Json::array();
  if (e.word)
    for (int i : *e.word) j.push_back("s" + std::to_string(i + 1));
  return j;
}

Json matrix_json(const Eigen::MatrixXi& m) {
  Json j = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(row);
  }
  return j;
}

Json weight_json(const WeightInfo& w) {
  Json j;
  if (w.provenance == WeightProvenance::Undefined)
    j["lambda"] = nullptr;
  else
    j["lambda"] = w.value;
  j["provenance"] = to_string(w.provenance);
  return j;
}

}  // namespace

Json datum_json(const RelativeDatum& d) {
  Json j;
  j["ambient"] = to_string(d.ambient);
  Json levi = Json::array();
  for (int l : d.levi) levi.push_back("a" + std::to_string(l + 1));
  j["levi"] = levi;
  j["relative_type"] = to_string(d.rel_type);
  j["relative_root_count"] = d.rel_root_count;
  Json nodes = Json::array();
  for (int a : d.display_order) {
    Json nj;
    nj["name"] = "a" + std::to_string(a + 1);
    nj["projection"] = rational_vec_str(d.projected.at(a));
    nj["length"] = to_string(d.lengths.at(a));
    const Json wj = weight_json(d.weights.at(a));
    nj["lambda"] = wj["lambda"];
    nj["lambda_provenance"] = wj["provenance"];
    nj["generator_word"] = word_json(d.hat_gen.at(a));
    nodes.push_back(nj);
  }
  j["nodes"] = nodes;
  j["relative_cartan"] = matrix_json(d.rel_cartan);
  j["product_orders"] = matrix_json(product_order_table(d));
  Json ver = Json::array();
  for (const auto& v : d.verified) ver.push_back(v);
  j["verified"] = ver;
  return j;
}

Json datum_json(const FoldingDatum& d) {
  Json j;
  j["ambient"] = "E6";
  j["twisted"] = true;
  Json img = Json::array();
  for (int i = 0; i < 6; ++i)
    img.push_back("a" + std::to_string(i + 1) + "->a" + std::to_string(d.simple_image[i] + 1));
  j["diagram_permutation"] = img;
  j["relative_type"] = to_string(d.rel_type);
  j["relative_root_count"] = d.rel_root_count;
  Json nodes = Json::array();
  for (std::size_t k = 0; k < d.orbits.size(); ++k) {
    Json nj;
    std::ostringstream name;
    if (d.orbits[k].size() == 1) {
      name << "a" << d.orbits[k][0] + 1;
    } else {
      name << "(";
      for (std::size_t i = 0; i < d.orbits[k].size(); ++i)
        name << (i ? "+" : "") << "a" << d.orbits[k][i] + 1;
      name << ")/" << d.orbits[k].size();
    }
    nj["name"] = name.str();
    Json orbit = Json::array();
    for (int i : d.orbits[k]) orbit.push_back("a" + std::to_string(i + 1));
    nj["orbit"] = orbit;
    nj["length"] = to_string(d.lengths[k]);
    nj["lambda"] = d.weights[k];
    nj["generator_word"] = word_json(d.orbit_gen[k]);
    nodes.push_back(nj);
  }
  j["nodes"] = nodes;
  j["relative_cartan"] = matrix_json(d.rel_cartan);
  Json ver = Json::array();
  for (const auto& v : d.verified) ver.push_back(v);
  j["verified"] = ver;
  return j;
}

std::string datum_text(const RelativeDatum& d) {
  const Json j = datum_json(d);
  std::ostringstream os;
  os << "ambient " << to_string(d.ambient) << ", Levi {";
  for (std::size_t i = 0; i < d.levi.size(); ++i) os << (i ? "," : "") << "a" << d.levi[i] + 1;
  os << "} -> relative type " << to_string(d.rel_type) << " with " << d.rel_root_count
     << " roots\n";
  for (const auto& n : j.at("nodes")) {
    os << "  " << n.at("name").get<std::string>() << ": " << n.at("length").get<std::string>();
    if (!n.at("lambda").is_null()) os << ", lambda = " << n.at("lambda").get<int>();
    os << " (" << n.at("lambda_provenance").get<std::string>() << "), generator";
    for (const auto& s : n.at("generator_word")) os << " " << s.get<std::string>();
    os << "\n";
  }
  for (const auto& v : d.verified) os << "  verified: " << v << "\n";
  return os.str();
}

std::string datum_text(const FoldingDatum& d) {
  const Json j = datum_json(d);
  std::ostringstream os;
  os << "twisted E6 folding -> relative type " << to_string(d.rel_type) << " with "
     << d.rel_root_count << " roots\n";
  for (const auto& n : j.at("nodes")) {
    os << "  " << n.at("name").get<std::string>() << ": " << n.at("length").get<std::string>()
       << ", lambda = " << n.at("lambda").get<int>() << ", generator";
    for (const auto& s : n.at("generator_word")) os << " " << s.get<std::string>();
    os << "\n";
  }
  for (const auto& v : d.verified) os << "  verified: " << v << "\n";
  return os.str();
}

namespace {

Json summary_of(const RelativeDatum& d) {
  Json j;
  j["relative_type"] = to_string(d.rel_type);
  j["relative_root_count"] = d.rel_root_count;
  Json nodes = Json::array();
  for (int a : d.display_order) {
    Json nj;
    nj["name"] = "a" + std::to_string(a + 1);
    nj["length"] = to_string(d.lengths.at(a));
    const Json wj = weight_json(d.weights.at(a));
    nj["lambda"] = wj["lambda"];
    nj["lambda_provenance"] = wj["provenance"];
    nodes.push_back(nj);
  }
  j["nodes"] = nodes;
  return j;
}

Json expected_node(const std::string& name, const std::string& len, Json lambda,
                   const std::string& prov) {
  Json nj;
  nj["name"] = name;
  nj["length"] = len;
  nj["lambda"] = std::move(lambda);
  nj["lambda_provenance"] = prov;
  return nj;
}

}  // namespace

std::vector<CaseOutcome> case_studies() {
  std::vector<CaseOutcome> out;

  auto run_case = [&](const std::string& name, Type ambient_t, std::vector<int> levi,
                      Json expected) {
    CaseOutcome c;
    c.name = name;
    c.expected = expected;
    c.actual = summary_of(relative_system(ambient_t, std::move(levi)));
    c.pass = c.actual == c.expected;
    out.push_back(std::move(c));
  };

  {
    Json e;
    e["relative_type"] = "B2";
    e["relative_root_count"] = 8;
    e["nodes"] = Json::array({expected_node("a1", "long", 3, "published"),
                              expected_node("a4", "short", 3, "published")});
    run_case("F4 over B2(a2,a3)", Type::F4, {1, 2}, e);
  }
  {
    Json e;
    e["relative_type"] = "F4";
    e["relative_root_count"] = 48;
    e["nodes"] = Json::array({expected_node("a1", "long", nullptr, "undefined"),
                              expected_node("a3", "long", nullptr, "undefined"),
                              expected_node("a4", "short", nullptr, "undefined"),
                              expected_node("a6", "short", nullptr, "undefined")});
    run_case("E7 over A1xA1xA1(a2,a5,a7)", Type::E7, {1, 4, 6}, e);
  }
  {
    Json e;
    e["relative_type"] = "F4";
    e["relative_root_count"] = 48;
    e["nodes"] = Json::array({expected_node("a8", "long", 1, "criterion"),
                              expected_node("a7", "long", 1, "criterion"),
                              expected_node("a6", "short", 4, "published"),
                              expected_node("a1", "short", 4, "published")});
    run_case("E8 over D4(a2,a3,a4,a5)", Type::E8, {1, 2, 3, 4}, e);
  }
  {
    Json e;
    e["relative_type"] = "G2";
    e["relative_root_count"] = 12;
    e["nodes"] = Json::array({expected_node("a2", "long", nullptr, "undefined"),
                              expected_node("a4", "short", nullptr, "undefined")});
    run_case("E6 over A2xA2(a1,a3,a5,a6)", Type::E6, {0, 2, 4, 5}, e);
  }
  {
    Json e;
    e["relative_type"] = "G2";
    e["relative_root_count"] = 12;
    e["nodes"] = Json::array({expected_node("a8", "long", 1, "criterion"),
                              expected_node("a7", "short", 9, "published")});
    run_case("E8 over E6(a1..a6)", Type::E8, {0, 1, 2, 3, 4, 5}, e);
  }
  {
    CaseOutcome c;
    c.name = "twisted E6 folding";
    Json e;
    e["relative_type"] = "F4";
    e["relative_root_count"] = 48;
    e["nodes"] = Json::array(
        {expected_node("a2", "long", 1, "computed"), expected_node("a4", "long", 1, "computed"),
         expected_node("(a3+a5)/2", "short", 2, "computed"),
         expected_node("(a1+a6)/2", "short", 2, "computed")});
    const FoldingDatum d = fold_twisted_e6();
    Json a;
    a["relative_type"] = to_string(d.rel_type);
    a["relative_root_count"] = d.rel_root_count;
    Json nodes = Json::array();
    const Json dj = datum_json(d);
    for (std::size_t k = 0; k < d.orbits.size(); ++k)
      nodes.push_back(expected_node(dj["nodes"][k]["name"].get<std::string>(),
                                    to_string(d.lengths[k]), d.weights[k], "computed"));
    a["nodes"] = nodes;
    c.expected = e;
    c.actual = a;
    c.pass = c.actual == c.expected;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> parse_levi(const std::string& s, int rank) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty() && (tok[0] == 'a' || tok[0] == 'A')) tok = tok.substr(1);
    if (tok.empty()) throw std::invalid_argument("bad Levi node: '" + tok + "'");
    int v;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad Levi node: '" + tok + "'");
    }
    if (v < 1 || v > rank) throw std::invalid_argument("Levi node out of range: " + tok);
    out.push_back(v - 1);
  }
  if (out.empty()) throw std::invalid_argument("empty Levi subset");
  return out;
}

}  // namespace f4l
