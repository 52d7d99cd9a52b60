#pragma once

// F-stable classes modelled by a finite abelian component group A with a
// Frobenius automorphism: class splitting, the twisting operator,
// characteristic functions of cuspidal character sheaves and the E6 / D4
// basis tables built from them.

#include <optional>
#include <string>
#include <vector>

#include "chartab/classfun.hpp"
#include "chartab/exactnum.hpp"

namespace chartab {

/// Coordinates of an element of Z/n1 x ... x Z/nk.
using GroupElem = std::vector<int>;

struct CompGroup {
  std::vector<int> orders;
  /// F(x)_i = sum_j frobenius[i][j] * x_j (mod orders[i]).
  std::vector<std::vector<int>> frobenius;
  /// Names of the generators of the cyclic factors, used for printing.
  std::vector<std::string> factor_names;
  GroupElem g0bar;
  /// Marked element (E6 only).
  std::optional<GroupElem> a;

  int size() const;
  /// Elements with the first coordinate varying fastest.
  std::vector<GroupElem> elements() const;
  int index_of(const GroupElem& x) const;
  GroupElem add(const GroupElem& x, const GroupElem& y) const;
  GroupElem neg(const GroupElem& x) const;
  GroupElem apply_frobenius(const GroupElem& x) const;
  /// `1`, `g0`, `g0^2*a`, ...
  std::string name(const GroupElem& x) const;

  /// Checks that F is an automorphism fixing g0bar and, when a is marked,
  /// that A = <g0bar> x <a>. Throws DomainError.
  void validate() const;
};

struct SigmaDescriptor {
  std::string name;
  CompGroup group;
  int half_codim = 0;
  /// Centralizer order of every class of the split set (a declared input).
  PolQ centralizer;
  bool twisted = false;
};

/// F-conjugacy classes of A: cosets of {b - F(b)}.
struct ClassSplit {
  std::vector<std::string> labels;    // "C_" + representative name
  std::vector<GroupElem> reps;        // smallest element in element order
  std::vector<int> class_of;          // per element index
  std::vector<std::string> ss_tags;   // per class: "s0", "s1", ...
};

ClassSplit split_classes(const SigmaDescriptor& desc);

/// Number of F-fixed points of A.
int fixed_point_count(const CompGroup& g);

/// C_a -> C_{g0bar * a}. Throws DomainError on an unknown label.
std::string twist(const SigmaDescriptor& desc, const std::string& label);

/// Class table of the split set. Coset and semisimple-part tags are the
/// cosets of <g0bar> + image(1 - F), numbered s0, s1, ... in element order.
TablePtr class_table(const SigmaDescriptor& desc);

struct LinearChar {
  std::string name;
  GroupElem exponents;
  std::vector<CycQ> values;  // one per element, element order
  CycQ at(const CompGroup& g, const GroupElem& x) const { return values[static_cast<std::size_t>(g.index_of(x))]; }
};

/// Characters x -> prod zeta_{n_i}^{m_i x_i}; each cyclic order must divide
/// 6. Sorted lexicographically in the exponent vector, each followed by its
/// complex conjugate; named psi1, psi2, ... With nontrivial_on_g0 only the
/// characters with psi(g0bar) != 1 are kept (DomainError when none is).
std::vector<LinearChar> linear_characters(const SigmaDescriptor& desc, bool nontrivial_on_g0);

/// True when psi is constant on F-conjugacy classes.
bool is_f_invariant(const SigmaDescriptor& desc, const LinearChar& psi);

/// q^half_codim * psi(a) on C_a. DomainError if psi is not F-invariant.
ClassFunction characteristic_function(const SigmaDescriptor& desc, const LinearChar& psi);

/// psi(g0bar); asserts chi o twist = psi(g0bar) chi classwise (Inconsistent).
CycQ twist_eigenvalue(const SigmaDescriptor& desc, const LinearChar& psi);

/// Images of the class labels under g0bar^i a^j -> g0bar^i a^-j. Requires a
/// marked element and a trivial F (DomainError).
std::vector<std::string> gamma_action(const SigmaDescriptor& desc);

// ---------------------------------------------------------------------------
// Scenario data

/// C3 x C3 with generators g0 and a, half codimension 3, centralizer
/// placeholder |A^F| q^6. F is trivial or (x, y) -> (x, -y).
SigmaDescriptor e6_descriptor(bool frobenius_trivial, bool twisted = false);

/// C2 with F trivial, g0bar the nontrivial element, half codimension 2,
/// centralizer orders 2q^4.
SigmaDescriptor d4_descriptor(bool twisted = false);

struct BasisTable {
  std::string title;
  std::vector<std::string> row_names;
  std::vector<ClassFunction> rows;
  TablePtr table;
};

/// The six linear characters of the E6 component group that are nontrivial
/// on <g0bar>, evaluated on the nine elements.
struct CharacterTable {
  std::vector<std::string> row_names;
  std::vector<std::string> column_names;
  std::vector<std::vector<CycQ>> values;
};
CharacterTable e6_linear_character_table();

/// chi_1, chi_2 on the three classes when F acts nontrivially.
BasisTable prop53_table();

/// chi_0, chi_1, chi_2 restricted to each semisimple part. Built with
/// coset_average from the full-support rows and cross-checked against the
/// direct product with the ss indicators; Inconsistent on disagreement.
BasisTable e6_basis_table(bool frobenius_trivial);

/// The same rows computed only as chi_k * indicator(s_i).
BasisTable e6_basis_table_direct(bool frobenius_trivial);

/// Full-support chi_0, chi_1, chi_2 on the nine classes.
BasisTable e6_full_support_rows();

/// lambda_i as class functions on the nine-class table (theta^(i j) on the
/// coset s_j), together with lambda_i(s) for every tag s.
struct CosetCharacters {
  std::vector<ClassFunction> lambdas;
  std::vector<std::vector<CycQ>> at_tag;  // [i][j] = lambda_i(s_j)
};
CosetCharacters e6_coset_characters();

/// chi_A0 = (q^2, -q^2) on the two classes of the regular unipotent class.
BasisTable d4_table(bool twisted = false);

struct E6Scenario {
  long q = 0;
  bool twisted = false;
  bool k_action_trivial = false;
  int class_count = 0;
  int cf_dimension = 0;
  int f_invariant_cuspidal = 0;
  int unipotent_characters = 30;
  std::string marked_element_note;
  BasisTable table;
};

/// Throws DomainError when q is not a prime power or is divisible by 3.
E6Scenario e6_scenario(long q, bool twisted);

/// One candidate Frobenius automorphism of C3 x C3 fixing g0bar with three
/// fixed points.
struct FrobeniusCandidate {
  std::vector<std::vector<int>> matrix;
  bool g0_powers_distinct = false;  // 1, g0bar, g0bar^2 in distinct classes
  bool isomorphic_to_reference = false;
};

/// Enumerates every such automorphism and compares its class partition with
/// that of (x, y) -> (x, -y) up to automorphisms of A fixing g0bar.
std::vector<FrobeniusCandidate> frobenius_candidates();

}  // namespace chartab
