#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "f4l/rational.hpp"

namespace f4l {

enum class Type { A1, B2, G2, D4, F4, E6, E7, E8 };

std::string to_string(Type t);
Type type_from_string(std::string_view s);

/// Static data of an ambient type: Cartan matrix with the convention
/// a(i,j) = 2(alpha_i, alpha_j) / (alpha_j, alpha_j), a symmetriser making
/// diag(d) * cartan symmetric positive definite, squared lengths normalised
/// so short roots have length 1, and the degrees of the basic invariants.
struct AmbientData {
  Type name;
  Eigen::MatrixXi cartan;
  Eigen::VectorXi symmetrizer;
  Eigen::VectorXi sq_length;
  std::vector<std::string> node_names;  // "a1".."an"
  std::vector<int> invariant_degrees;
};

const AmbientData& ambient(Type t);

enum class LengthClass { Long, Short, SimplyLaced };
std::string to_string(LengthClass c);

/// Maximal string beta - p*alpha ... beta + q*alpha through beta.
struct RootString {
  int alpha;
  int beta;
  int p;
  int q;
};

class RootSystem {
 public:
  static RootSystem build(Type t);

  Type type() const { return data_->name; }
  const AmbientData& data() const { return *data_; }
  int rank() const { return static_cast<int>(data_->cartan.rows()); }
  int size() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return npos_; }

  const Eigen::VectorXi& coords(int idx) const { return roots_[idx]; }
  bool positive(int idx) const { return idx < npos_; }
  Rational sq_length(int idx) const;
  LengthClass length_class(int idx) const;

  /// Index of a coordinate vector in the root list, or -1.
  int index_of(const Eigen::VectorXi& v) const;
  bool is_root(const Eigen::VectorXi& v) const { return index_of(v) >= 0; }
  int negate(int idx) const { return idx < npos_ ? idx + npos_ : idx - npos_; }
  int simple_root(int i) const { return simple_idx_[i]; }

  /// Simple reflection s_i as a permutation of root indices.
  const std::vector<int32_t>& simple_perm(int i) const { return perm_[i]; }

  /// s_i(v) = v - <v, alpha_i^vee> alpha_i on coordinate vectors.
  template <class S>
  Vector<S> reflect(int i, Vector<S> v) const {
    S a(0);
    for (int j = 0; j < rank(); ++j) a += S(data_->cartan(j, i)) * v(j);
    v(i) = v(i) - a;
    return v;
  }
  Eigen::VectorXi reflect(int i, Eigen::VectorXi v) const;

  /// Symmetrised bilinear form on coordinate vectors.
  Rational inner(const VectorQ& x, const VectorQ& y) const;
  Rational inner(const Eigen::VectorXi& x, const Eigen::VectorXi& y) const;

  RootString root_string(int alpha_idx, int beta_idx) const;

  /// 2 * Gram matrix of the simple roots (integral).
  const Eigen::MatrixXi& doubled_gram() const { return dgram_; }

 private:
  const AmbientData* data_ = nullptr;
  std::vector<Eigen::VectorXi> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int32_t>> perm_;
  std::vector<int> simple_idx_;
  Eigen::MatrixXi dgram_;
  int npos_ = 0;
};

}  // namespace f4l
