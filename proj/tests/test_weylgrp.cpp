#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "f4l/poly.hpp"
#include "f4l/weylgrp.hpp"

using namespace f4l;

namespace {

const Enumeration& f4_enum() {
  static const Enumeration en = Enumeration::build(WeylGroup(RootSystem::build(Type::F4)));
  return en;
}

}  // namespace

TEST_CASE("word orders realise the braid presentation") {
  const WeylGroup& g = f4_enum().group();
  CHECK(g.is_identity(g.from_word({})));
  CHECK(g.order(g.from_word({0, 1})) == 3);  // (d a)^3 = 1
  CHECK(g.order(g.from_word({1, 2})) == 4);  // (a tau)^4 = 1
  CHECK(g.order(g.from_word({2, 3})) == 3);
  CHECK(g.order(g.from_word({0, 2})) == 2);
  CHECK(g.order(g.from_word({0, 3})) == 2);
  CHECK(g.order(g.from_word({1, 3})) == 2);
  for (int i = 0; i < 4; ++i) CHECK(g.order(g.generator(i)) == 2);
  CHECK_THROWS_AS(g.from_word({4}), std::invalid_argument);
}

TEST_CASE("enumeration sizes") {
  CHECK(f4_enum().size() == 1152);
  // Cross-check: the product of the invariant degrees.
  long long prod = 1;
  for (int d : f4_enum().group().roots().data().invariant_degrees) prod *= d;
  CHECK(prod == 1152);

  CHECK(Enumeration::build(WeylGroup(RootSystem::build(Type::B2))).size() == 8);
  CHECK(Enumeration::build(WeylGroup(RootSystem::build(Type::G2))).size() == 12);
  CHECK(Enumeration::build(WeylGroup(RootSystem::build(Type::A1))).size() == 2);
  CHECK(Enumeration::build(WeylGroup(RootSystem::build(Type::D4))).size() == 192);

  CHECK_THROWS_AS(Enumeration::build(WeylGroup(RootSystem::build(Type::D4)), 100),
                  std::runtime_error);
}

TEST_CASE("reduced words: length, lex minimality, round trip") {
  const Enumeration& en = f4_enum();
  const WeylGroup& g = en.group();
  for (int idx = 0; idx < en.size(); ++idx) {
    const GroupElement& e = en.at(idx);
    CHECK(static_cast<int>(e.word->size()) == g.length(e));
  }
  // BFS order is by (length, word).
  for (int idx = 1; idx < en.size(); ++idx) {
    const auto& a = *en.at(idx - 1).word;
    const auto& b = *en.at(idx).word;
    CHECK(std::pair(a.size(), a) < std::pair(b.size(), b));
  }
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> pick(0, en.size() - 1);
  for (int t = 0; t < 50; ++t) {
    const GroupElement& e = en.at(pick(rng));
    const std::vector<int> w = g.reduced_word(e);
    CHECK(static_cast<int>(w.size()) == g.length(e));
    CHECK(g.from_word(w).perm == e.perm);
  }
}

TEST_CASE("stored words are least among all reduced words (brute force)") {
  // Oracle: enumerate every word up to the longest-element length and keep
  // the least (length, lex) word per element.
  for (Type t : {Type::B2, Type::G2}) {
    const Enumeration en = Enumeration::build(WeylGroup(RootSystem::build(t)));
    const WeylGroup& g = en.group();
    std::vector<int> all(g.rank());
    std::iota(all.begin(), all.end(), 0);
    const int maxlen = g.length(g.longest_element(all));

    std::map<std::vector<int32_t>, std::vector<int>> best;
    std::vector<std::vector<int>> level{{}};
    for (int len = 0; len <= maxlen; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : level) {
        const GroupElement e = g.from_word(w);
        auto it = best.find(e.perm);
        if (it == best.end()) best.emplace(e.perm, w);
        for (int i = 0; i < g.rank(); ++i) {
          std::vector<int> w2 = w;
          w2.push_back(i);
          next.push_back(std::move(w2));
        }
      }
      level = std::move(next);
    }
    CHECK(best.size() == static_cast<std::size_t>(en.size()));
    for (int idx = 0; idx < en.size(); ++idx)
      CHECK(best.at(en.at(idx).perm) == *en.at(idx).word);
  }
}

TEST_CASE("Poincare polynomial identity") {
  for (Type t : {Type::F4, Type::B2, Type::G2}) {
    const Enumeration en = t == Type::F4 ? f4_enum()
                                         : Enumeration::build(WeylGroup(RootSystem::build(t)));
    UniPoly lhs;
    for (int idx = 0; idx < en.size(); ++idx)
      lhs += UniPoly::monomial(static_cast<int>(en.at(idx).word->size()));
    UniPoly rhs(1);
    const UniPoly qm1 = UniPoly::q() - UniPoly(1);
    for (int d : en.group().roots().data().invariant_degrees)
      rhs *= exact_div(UniPoly::monomial(d) - UniPoly(1), qm1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("longest elements") {
  const WeylGroup& g = f4_enum().group();
  CHECK(g.is_identity(g.longest_element({})));

  const GroupElement w0 = g.longest_element({0, 1, 2, 3});
  CHECK(g.length(w0) == 24);
  CHECK(g.is_identity(g.compose(w0, w0)));
  // w0 sends every positive root to a negative root.
  for (int r = 0; r < g.roots().positive_count(); ++r)
    CHECK(w0.perm[r] >= g.roots().positive_count());
  // w0 conjugates the simple reflections to simple reflections.
  for (int i = 0; i < 4; ++i) {
    const GroupElement c = g.compose(w0, g.compose(g.generator(i), w0));
    bool simple = false;
    for (int j = 0; j < 4; ++j) simple = simple || c.perm == g.generator(j).perm;
    CHECK(simple);
  }

  const WeylGroup e8(RootSystem::build(Type::E8));
  CHECK(e8.length(e8.longest_element({1, 2, 3, 4})) == 12);  // D4 positive roots
  CHECK(e8.length(e8.longest_element({0, 1, 2, 3, 4, 5, 6, 7})) == 120);

  for (Type t : {Type::B2, Type::G2, Type::D4, Type::E7, Type::E8}) {
    const WeylGroup h(RootSystem::build(t));
    std::vector<int> all(h.rank());
    std::iota(all.begin(), all.end(), 0);
    const GroupElement w = h.longest_element(all);
    CHECK(h.is_identity(h.compose(w, w)));
  }
}

TEST_CASE("conjugacy classes of W(F4)") {
  const Enumeration& en = f4_enum();
  const ClassData cd = conjugacy_classes(en);
  CHECK(cd.num_classes() == 25);
  int sum = 0;
  for (int s : cd.sizes) sum += s;
  CHECK(sum == 1152);

  const WeylGroup& g = en.group();
  auto cls = [&](std::initializer_list<int> w) { return cd.class_of[en.index_of(g.from_word(w))]; };
  CHECK(cls({0}) == cls({1}));  // s1 ~ s2
  CHECK(cls({2}) == cls({3}));  // s3 ~ s4
  CHECK(cls({0}) != cls({2}));

  // class(w^2) depends only on class(w): exhaustive check.
  for (int idx = 0; idx < en.size(); ++idx) {
    const GroupElement& w = en.at(idx);
    const int sq = en.index_of(g.compose(w, w));
    CHECK(cd.class_of[sq] == cd.power_map[cd.class_of[idx]]);
  }
}

TEST_CASE("element orders") {
  const WeylGroup& g = f4_enum().group();
  CHECK(g.order(g.identity()) == 1);
  CHECK(g.order(g.generator(2)) == 2);
  // Coxeter element order equals |roots| / rank.
  const GroupElement cox = g.from_word({0, 1, 2, 3});
  CHECK(g.order(cox) == g.roots().size() / g.roots().rank());
  CHECK(g.order(cox) == 12);
  CHECK_THROWS_AS(g.order(cox, 5), std::runtime_error);
}

TEST_CASE("permutations commute with negation") {
  const Enumeration& en = f4_enum();
  const RootSystem& sys = en.group().roots();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, en.size() - 1);
  for (int t = 0; t < 40; ++t) {
    const GroupElement& e = en.at(pick(rng));
    for (int r = 0; r < sys.size(); ++r) CHECK(e.perm[sys.negate(r)] == sys.negate(e.perm[r]));
  }
}
