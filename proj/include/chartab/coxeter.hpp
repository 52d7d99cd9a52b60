#pragma once

// Weyl groups of types B_n and D_n realized as signed permutations of
// {1..n}, n <= 8.
//
// An element is packed into one 64-bit word: byte i holds the image of
// i+1 as (sign << 7) | (|image| - 1). Bytes at positions >= n hold the
// identity so that kernels can treat every element as an 8-lane vector.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace chartab {

enum class Family { B, D };

using Packed = std::uint64_t;

constexpr int kMaxRank = 8;
constexpr std::size_t kMaxGroupOrder = 100000;

class WElement {
 public:
  WElement() = default;
  static WElement identity(int rank);
  /// images[i] is the signed image of i+1, e.g. {-2, -1, 3} for rank 3.
  static WElement from_window(const std::vector<int>& images);
  static WElement from_packed(Packed p, int rank) { return WElement(p, rank); }

  int rank() const { return rank_; }
  Packed packed() const { return p_; }
  /// Signed image of i (1-based).
  int image(int i) const;
  std::vector<int> window() const;
  int negatives() const;

  WElement inverse() const;
  /// Composition of maps: (w * v)(i) = w(v(i)).
  friend WElement operator*(const WElement& w, const WElement& v);
  friend bool operator==(const WElement& x, const WElement& y) { return x.p_ == y.p_ && x.rank_ == y.rank_; }
  friend bool operator!=(const WElement& x, const WElement& y) { return !(x == y); }

  /// Window notation, e.g. `[-2,-1,3]`.
  std::string window_str() const;

 private:
  WElement(Packed p, int rank) : p_(p), rank_(rank) {}
  Packed p_ = 0;
  int rank_ = 0;
};

/// Identity packing for all eight lanes.
constexpr Packed kIdentityPacked = 0x0706050403020100ULL;

/// Composition on packed words; see WElement::operator*.
Packed compose_packed(Packed w, Packed v);

// ---------------------------------------------------------------------------
// Kernels. The scalar table is the reference; SIMD tables must agree with it
// on every input.

struct CoxeterKernels {
  const char* name;
  /// out[k] = w[k] * v[k]
  void (*compose)(const Packed* w, const Packed* v, Packed* out, std::size_t n);
  /// out[k] = x[k] * s
  void (*mul_right)(const Packed* x, Packed s, Packed* out, std::size_t n);
  /// out[k] = s * x[k] * fs
  void (*twisted_conj)(Packed s, Packed fs, const Packed* x, Packed* out, std::size_t n);
  /// Coxeter length in the given family.
  void (*length)(Family family, const Packed* x, int* out, std::size_t n);
};

const CoxeterKernels& scalar_kernels();
/// Every kernel table usable on this CPU, scalar first.
std::vector<const CoxeterKernels*> available_kernels();
/// The table selected at startup: the widest supported one, unless the
/// environment variable CHARTAB_SIMD names another (scalar, ssse3, avx2).
const CoxeterKernels& active_kernels();

/// Number of positive roots sent to negative roots, by explicit enumeration
/// of the root system. Slow; used as the independent definition of length.
int length_by_roots(Family family, const WElement& w);

int length(Family family, const WElement& w);

// ---------------------------------------------------------------------------

struct CoxeterDatum {
  Family family = Family::B;
  int rank = 0;
  /// automorphism[label - 1] is the image label; the identity when empty.
  std::vector<int> automorphism;

  /// B_n or D_n with the identity automorphism. Throws DomainError for an
  /// unsupported rank.
  static CoxeterDatum make(Family family, int rank);
  /// D_n with the automorphism swapping the fork labels 1 and 2.
  static CoxeterDatum twisted_d(int rank);
  /// Parse `B4`, `D5`, `2D4` (twisted).
  static CoxeterDatum parse(const std::string& text);

  bool twisted() const;
  int sigma(int label) const;
  std::string name() const;
  bool operator==(const CoxeterDatum& o) const {
    return family == o.family && rank == o.rank && twisted() == o.twisted();
  }
};

/// Generators in label order. B_n: label 1 is the sign change t at position
/// 1 and label k >= 2 is the transposition (k-1, k). D_n: labels 1 and 2 are
/// (1,2) and its negated form; label k >= 3 is (k-1, k).
std::vector<WElement> generators(const CoxeterDatum& d);
/// m(s, s') for labels 1..rank, row-major (rank x rank).
std::vector<std::vector<int>> coxeter_matrix(const CoxeterDatum& d);
/// Image of w under the diagram automorphism.
WElement apply_automorphism(const CoxeterDatum& d, const WElement& w);

/// Product of generators in the given order. Throws DomainError on an
/// invalid label.
WElement word_to_element(const CoxeterDatum& d, const std::vector<int>& word);
/// A reduced word for w, lexicographically smallest among left-descent
/// greedy choices.
std::vector<int> reduced_word(const CoxeterDatum& d, const WElement& w);
/// `s1*s3*s4`; the identity prints as `e`.
std::string word_str(const std::vector<int>& word);
/// Parse `1,2,3` or `s1*s2*s3`; empty text or `e` is the empty word.
std::vector<int> parse_word(const std::string& text);

/// Order of W, without enumerating.
std::size_t group_order(Family family, int rank);

/// A fully enumerated group, sorted by (length, packed value).
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterDatum d);
  /// Cached enumeration shared across callers.
  static std::shared_ptr<const CoxeterGroup> get(const CoxeterDatum& d);

  const CoxeterDatum& datum() const { return datum_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Packed>& packed() const { return elements_; }
  WElement element(std::size_t i) const { return WElement::from_packed(elements_[i], datum_.rank); }
  int length(std::size_t i) const { return lengths_[i]; }
  /// Position of an element; throws DomainError if absent.
  std::size_t index_of(Packed p) const;

 private:
  CoxeterDatum datum_;
  std::vector<Packed> elements_;
  std::vector<int> lengths_;
  std::unordered_map<Packed, std::size_t> index_;
};

struct ClassPartition {
  /// class_of[i] is the class of element i of the group.
  std::vector<int> class_of;
  /// Member indices of each class; classes are ordered by smallest member.
  std::vector<std::vector<std::size_t>> classes;
  std::size_t count() const { return classes.size(); }
};

/// Orbits of x -> b x F(b)^{-1} where F is the datum's automorphism.
ClassPartition f_conjugacy_classes(const CoxeterGroup& g);

}  // namespace chartab
