#pragma once

// Iwahori-Hecke algebras of type B_n with parameters (Q, q) and of type D_n
// with equal parameter q, through seminormal matrices on standard
// bitableaux.
//
// Relations: (T_t - Q)(T_t + 1) = 0 for the distinguished generator t and
// (T_u - q)(T_u + 1) = 0 for the chain generators u_1..u_{n-1}.
//
// Type D_n is realized inside B_n with Q = 1: s1 -> T_{u1},
// s2 -> T_t T_{u1} T_t, s_k -> T_{u_{k-1}} for k >= 3. The twisted algebra
// of 2D_n is B_{n-1} with Q = q^2, where the fused pair {s1, s2} becomes t.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chartab/coxeter.hpp"
#include "chartab/exactnum.hpp"

namespace chartab {

using Partition = std::vector<int>;

/// All partitions of n, in reverse lexicographic order (n first).
std::vector<Partition> partitions(int n);

struct Bipartition {
  Partition lambda;
  Partition mu;

  int size() const;
  /// `λparts.μparts` with single-digit parts, e.g. `1.31`, `.32`, `211.`.
  std::string str() const;
  static Bipartition parse(const std::string& text);

  friend bool operator==(const Bipartition& a, const Bipartition& b) {
    return a.lambda == b.lambda && a.mu == b.mu;
  }
  friend bool operator!=(const Bipartition& a, const Bipartition& b) { return !(a == b); }
  friend bool operator<(const Bipartition& a, const Bipartition& b) {
    return a.lambda != b.lambda ? a.lambda > b.lambda : a.mu > b.mu;
  }
};

/// All bipartitions of n ordered by |λ| descending, then λ, then μ.
std::vector<Bipartition> bipartitions(int n);
/// Unordered labels {λ, μ} with λ != μ, each listed once with λ >= μ in the
/// bipartition order; these are the D_n labels that occur in this library.
std::vector<Bipartition> d_labels(int n);

struct HeckeSpec {
  enum class Kind { B, D, TwistedD };
  Kind kind = Kind::B;
  /// Rank of the Weyl group named by the user (5 for D5 and for 2D5).
  int rank = 0;
  /// Parameter of t in the underlying type-B algebra.
  PolQ Q = PolQ::q();

  static HeckeSpec type_b(int rank, PolQ Q);
  static HeckeSpec type_d(int rank);
  static HeckeSpec twisted_d(int rank);
  /// `B4` (Q defaults to q), `D5`, `2D5`.
  static HeckeSpec parse(const std::string& type, const std::string& Q = "");

  std::string name() const;
  /// Rank of the type-B algebra that carries the representations.
  int b_rank() const;
  /// The word in type-B generator labels (1 = t, k = u_{k-1}).
  std::vector<int> to_b_word(const std::vector<int>& word) const;
  /// Check and normalize a character label for this algebra.
  Bipartition check_label(const Bipartition& label) const;
  /// All character labels of the algebra (Irr of its Weyl group).
  std::vector<Bipartition> labels() const;
};

/// Dense square matrix over RatQ.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
  static RatMatrix identity(int n);

  int size() const { return n_; }
  RatQ& at(int i, int j) { return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
  const RatQ& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }
  RatQ trace() const;

  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y);
  friend RatMatrix operator*(const RatQ& c, const RatMatrix& x);
  friend bool operator==(const RatMatrix& x, const RatMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  int n_ = 0;
  std::vector<RatQ> a_;
};

/// One box of a standard bitableau: which component (0 = λ, 1 = μ), row and
/// column, all 0-based.
struct Box {
  int side;
  int row;
  int col;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// boxes[k] holds the box of entry k+1.
using Bitableau = std::vector<Box>;

std::vector<Bitableau> standard_bitableaux(const Bipartition& bp);

/// Seminormal representation of H(B_n; Q, q) labelled by a bipartition of n.
/// Generator labels: 1 = t, k = u_{k-1}.
class SeminormalRep {
 public:
  SeminormalRep(const Bipartition& bp, const PolQ& Q);

  const Bipartition& label() const { return label_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int rank() const { return rank_; }
  const std::vector<Bitableau>& basis() const { return basis_; }
  const RatMatrix& generator(int b_label) const;
  /// Product of generator matrices in word order.
  RatMatrix word_matrix(const std::vector<int>& b_word) const;

 private:
  Bipartition label_;
  int rank_;
  std::vector<Bitableau> basis_;
  std::vector<RatMatrix> gens_;
};

/// Cached seminormal representation of the type-B algebra behind spec.
std::shared_ptr<const SeminormalRep> representation(const HeckeSpec& spec, const Bipartition& label);

/// Character value φ_q(T_w) for the word, written in the generator labels
/// of the algebra named by spec. Throws DomainError on a bad label or word and Inconsistent when
/// the trace is not a polynomial.
PolQ char_value(const HeckeSpec& spec, const Bipartition& label, const std::vector<int>& word);

/// Signed cycle type of a signed permutation: lengths of positive cycles and
/// of negative cycles, each sorted descending.
std::pair<std::vector<int>, std::vector<int>> signed_cycle_type(const WElement& w);

/// Irreducible character of W(B_n) labelled by bp, by the
/// Murnaghan-Nakayama rule on signed cycle types.
Rational bn_character(const Bipartition& bp, const std::vector<int>& positive_cycles,
                      const std::vector<int>& negative_cycles);

/// The value of the character at q = 1 (and Q = 1). Throws Inconsistent when
/// it differs from the Murnaghan-Nakayama value of the word's element.
CycQ q1_specialize_check(const HeckeSpec& spec, const Bipartition& label, const std::vector<int>& word);

}  // namespace chartab
