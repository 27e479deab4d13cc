#include "f4l/weylgrp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace f4l {

GroupElement WeylGroup::identity() const {
  GroupElement g;
  g.perm.resize(sys_.size());
  std::iota(g.perm.begin(), g.perm.end(), 0);
  g.word = std::vector<int>{};
  return g;
}

GroupElement WeylGroup::generator(int i) const {
  if (i < 0 || i >= rank()) throw std::invalid_argument("generator: bad simple index");
  GroupElement g;
  g.perm = sys_.simple_perm(i);
  g.word = std::vector<int>{i};
  return g;
}

GroupElement WeylGroup::from_word(std::span<const int> word) const {
  // w = s_{i1} ... s_{ik} acts by applying s_{ik} first.
  GroupElement g = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("from_word: bad simple index");
    g = compose(g, generator(i));
  }
  g.word = std::vector<int>(word.begin(), word.end());
  return g;
}

GroupElement WeylGroup::compose(const GroupElement& a, const GroupElement& b) const {
  GroupElement g;
  g.perm.resize(a.perm.size());
  for (std::size_t r = 0; r < b.perm.size(); ++r) g.perm[r] = a.perm[b.perm[r]];
  if (a.word && b.word) {
    g.word = *a.word;
    g.word->insert(g.word->end(), b.word->begin(), b.word->end());
  }
  return g;
}

GroupElement WeylGroup::inverse(const GroupElement& a) const {
  GroupElement g;
  g.perm.resize(a.perm.size());
  for (std::size_t r = 0; r < a.perm.size(); ++r) g.perm[a.perm[r]] = static_cast<int32_t>(r);
  if (a.word) {
    g.word = std::vector<int>(a.word->rbegin(), a.word->rend());
  }
  return g;
}

bool WeylGroup::is_identity(const GroupElement& a) const {
  for (std::size_t r = 0; r < a.perm.size(); ++r)
    if (a.perm[r] != static_cast<int32_t>(r)) return false;
  return true;
}

int WeylGroup::length(const GroupElement& a) const {
  const int npos = sys_.positive_count();
  int l = 0;
  for (int r = 0; r < npos; ++r)
    if (a.perm[r] >= npos) ++l;
  return l;
}

int WeylGroup::order(const GroupElement& a, int cap) const {
  GroupElement p = a;
  for (int k = 1; k <= cap; ++k) {
    if (is_identity(p)) return k;
    p = compose(p, a);
  }
  throw std::runtime_error("order: cap exceeded");
}

GroupElement WeylGroup::longest_element(std::span<const int> subset) const {
  GroupElement w = identity();
  const int npos = sys_.positive_count();
  for (;;) {
    int pick = -1;
    for (int i : subset) {
      if (i < 0 || i >= rank()) throw std::invalid_argument("longest_element: bad simple index");
      if (w.perm[sys_.simple_root(i)] < npos) {
        pick = i;
        break;
      }
    }
    if (pick < 0) return w;
    w = compose(w, generator(pick));
  }
}

std::vector<int> WeylGroup::reduced_word(const GroupElement& a) const {
  std::vector<int> out;
  GroupElement cur = a;
  const int npos = sys_.positive_count();
  while (!is_identity(cur)) {
    GroupElement inv = inverse(cur);
    int pick = -1;
    for (int i = 0; i < rank(); ++i)
      if (inv.perm[sys_.simple_root(i)] >= npos) {
        pick = i;
        break;
      }
    if (pick < 0) throw std::logic_error("reduced_word: no descent on a non-identity element");
    out.push_back(pick);
    cur = compose(generator(pick), cur);
  }
  return out;
}

Enumeration Enumeration::build(WeylGroup g, std::size_t cap) {
  Enumeration en;
  en.group_ = std::move(g);
  const int n = en.group_.rank();

  GroupElement id = en.group_.identity();
  en.elements_.push_back(id);
  en.index_.emplace(id.perm, 0);
  en.parent_.push_back(-1);
  en.last_.push_back(-1);

  // BFS in (length, lex word) order; the first word reaching an element is
  // its lexicographically least reduced word.
  for (std::size_t head = 0; head < en.elements_.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      GroupElement child = en.group_.compose(en.elements_[head], en.group_.generator(i));
      auto [it, fresh] = en.index_.emplace(child.perm, static_cast<int>(en.elements_.size()));
      if (fresh) {
        if (en.elements_.size() >= cap) throw std::runtime_error("enumerate: size bound exceeded");
        en.elements_.push_back(std::move(child));
        en.parent_.push_back(static_cast<int>(head));
        en.last_.push_back(i);
      }
    }
  }

  // Keep only shortest words: BFS guarantees that already, but drop any
  // longer concatenation produced by compose and re-check length.
  for (auto& e : en.elements_)
    if (static_cast<int>(e.word->size()) != en.group_.length(e))
      throw std::logic_error("enumerate: word length disagrees with root-counting length");

  en.right_.assign(en.elements_.size(), std::vector<int32_t>(n));
  for (std::size_t idx = 0; idx < en.elements_.size(); ++idx)
    for (int i = 0; i < n; ++i) {
      GroupElement child = en.group_.compose(en.elements_[idx], en.group_.generator(i));
      en.right_[idx][i] = en.index_.at(child.perm);
    }

  en.inverse_.resize(en.elements_.size());
  for (std::size_t idx = 0; idx < en.elements_.size(); ++idx)
    en.inverse_[idx] = en.index_.at(en.group_.inverse(en.elements_[idx]).perm);

  return en;
}

int Enumeration::index_of(const std::vector<int32_t>& perm) const {
  auto it = index_.find(perm);
  return it == index_.end() ? -1 : it->second;
}

ClassData conjugacy_classes(const Enumeration& en) {
  const int n = en.size();
  const int rank = en.group().rank();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> orbits;

  for (int seed = 0; seed < n; ++seed) {
    if (cls[seed] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> orbit{seed};
    cls[seed] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const int w = orbit[head];
      for (int i = 0; i < rank; ++i) {
        // s_i w s_i
        const GroupElement c = en.group().compose(
            en.group().generator(i),
            en.group().compose(en.at(w), en.group().generator(i)));
        const int img = en.index_of(c.perm);
        if (cls[img] < 0) {
          cls[img] = id;
          orbit.push_back(img);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }

  // Representative: member with the least (length, word); order classes by it.
  auto word_key = [&](int idx) {
    const auto& w = *en.at(idx).word;
    return std::pair<int, std::vector<int>>(static_cast<int>(w.size()), w);
  };
  std::vector<int> reps(orbits.size());
  for (std::size_t c = 0; c < orbits.size(); ++c)
    reps[c] = *std::min_element(orbits[c].begin(), orbits[c].end(),
                                [&](int a, int b) { return word_key(a) < word_key(b); });
  std::vector<int> order(orbits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word_key(reps[a]) < word_key(reps[b]); });

  ClassData cd;
  cd.reps.resize(orbits.size());
  cd.sizes.resize(orbits.size());
  cd.class_of.resize(n);
  std::vector<int> renum(orbits.size());
  for (std::size_t k = 0; k < order.size(); ++k) renum[order[k]] = static_cast<int>(k);
  for (int e = 0; e < n; ++e) cd.class_of[e] = renum[cls[e]];
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    cd.reps[renum[c]] = reps[c];
    cd.sizes[renum[c]] = static_cast<int>(orbits[c].size());
  }

  cd.power_map.resize(orbits.size());
  for (int c = 0; c < cd.num_classes(); ++c) {
    const GroupElement& w = en.at(cd.reps[c]);
    cd.power_map[c] = cd.class_of[en.index_of(en.group().compose(w, w).perm)];
  }
  return cd;
}

}  // namespace f4l
