#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "f4l/rootsys.hpp"

namespace f4l {

/// A Weyl group element as a permutation of the root list. Elements produced
/// by words or enumeration also carry a word in the simple reflections
/// (0-based); for enumerated elements it is the lexicographically least
/// reduced word.
struct GroupElement {
  std::vector<int32_t> perm;
  std::optional<std::vector<int>> word;
};

class WeylGroup {
 public:
  explicit WeylGroup(RootSystem sys) : sys_(std::move(sys)) {}

  const RootSystem& roots() const { return sys_; }
  int rank() const { return sys_.rank(); }

  GroupElement identity() const;
  GroupElement generator(int i) const;
  GroupElement from_word(std::span<const int> word) const;
  GroupElement from_word(std::initializer_list<int> word) const {
    return from_word(std::span<const int>(word.begin(), word.size()));
  }

  /// a after b (composition of maps on V).
  GroupElement compose(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  bool is_identity(const GroupElement& a) const;

  /// Number of positive roots sent to negative roots.
  int length(const GroupElement& a) const;

  /// Least k >= 1 with a^k = 1; the cap guards against bugs.
  int order(const GroupElement& a, int cap = 100) const;

  /// Apply to an arbitrary coordinate vector (uses the word).
  template <class S>
  Vector<S> apply(const GroupElement& a, Vector<S> v) const {
    if (!a.word) throw std::invalid_argument("apply: element carries no word");
    for (auto it = a.word->rbegin(); it != a.word->rend(); ++it) v = sys_.reflect(*it, std::move(v));
    return v;
  }

  /// Image of a root index.
  int apply_root(const GroupElement& a, int idx) const { return a.perm[idx]; }

  /// Longest element of the parabolic subgroup on the given simple indices,
  /// computed by greedy ascent; its word is reduced.
  GroupElement longest_element(std::span<const int> subset) const;
  GroupElement longest_element(std::initializer_list<int> subset) const {
    return longest_element(std::span<const int>(subset.begin(), subset.size()));
  }

  /// Canonical reduced word (repeatedly strip the smallest left descent).
  std::vector<int> reduced_word(const GroupElement& a) const;

 private:
  RootSystem sys_;
};

/// Full enumeration of a small Weyl group with lexicographically least
/// reduced words, in BFS (length, then lex) order. Index 0 is the identity.
class Enumeration {
 public:
  static Enumeration build(WeylGroup g, std::size_t cap = 1000000);

  const WeylGroup& group() const { return group_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const GroupElement& at(int idx) const { return elements_[idx]; }
  int index_of(const std::vector<int32_t>& perm) const;
  int index_of(const GroupElement& g) const { return index_of(g.perm); }
  /// Index of at(idx) * s_i (Cayley table).
  int right(int idx, int i) const { return right_[idx][i]; }
  int parent(int idx) const { return parent_[idx]; }
  int last_letter(int idx) const { return last_[idx]; }
  int inverse_of(int idx) const { return inverse_[idx]; }
  int length_of(int idx) const { return static_cast<int>(elements_[idx].word->size()); }

  Enumeration() = default;

 private:
  WeylGroup group_{RootSystem()};
  std::vector<GroupElement> elements_;
  std::map<std::vector<int32_t>, int> index_;
  std::vector<std::vector<int32_t>> right_;
  std::vector<int> parent_;
  std::vector<int> last_;
  std::vector<int> inverse_;
};

/// Conjugacy classes of an enumerated group. Classes are numbered by their
/// representative's (length, word) rank; the representative is the member
/// with the lexicographically least shortest word.
struct ClassData {
  std::vector<int> class_of;   // element index -> class index
  std::vector<int> reps;       // class index -> element index
  std::vector<int> sizes;
  std::vector<int> power_map;  // class of w -> class of w^2

  int num_classes() const { return static_cast<int>(reps.size()); }
};

ClassData conjugacy_classes(const Enumeration& en);

}  // namespace f4l
