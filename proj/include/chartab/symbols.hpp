#pragma once

// Lusztig symbols for unipotent characters of D_n and 2D_n, their families,
// the Fourier matrices of the 4-element families and the f-vectors built
// from them.

#include <array>
#include <string>
#include <vector>

#include "chartab/exactnum.hpp"
#include "chartab/hecke.hpp"

namespace chartab {

/// An unordered pair of finite subsets of Z>=0. The stored orientation only
/// affects printing; equality and ordering use canonical().
struct Symbol {
  std::vector<int> S;  // ascending
  std::vector<int> T;  // ascending

  /// `(02,14)`; `-` stands for the empty set.
  std::string str() const;
  static Symbol parse(const std::string& text);

  /// Remove 0 from both rows and shift down while both contain 0.
  Symbol reduced() const;
  /// Reduced, with the larger row first (or the lexicographically smaller
  /// row first when the sizes agree).
  Symbol canonical() const;
  bool degenerate() const;

  friend bool operator==(const Symbol& a, const Symbol& b);
  friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
  friend bool operator<(const Symbol& a, const Symbol& b);
};

/// rank = sum of entries - floor((|S| + |T| - 1)^2 / 4), defect = ||S| - |T||.
std::pair<int, int> rank_defect(const Symbol& sym);

enum class UnipCase { D4Split, D4Twisted, D5Split, D5Twisted };

UnipCase parse_unip_case(const std::string& text);
std::string unip_case_name(UnipCase c);
int unip_rank(UnipCase c);
bool unip_twisted(UnipCase c);

/// A unipotent-character label: a symbol, plus a sign for the two copies of
/// a degenerate symbol (0 otherwise).
struct UnipLabel {
  Symbol symbol;
  int sign = 0;
  std::string str() const;
  friend bool operator==(const UnipLabel& a, const UnipLabel& b) {
    return a.symbol == b.symbol && a.sign == b.sign;
  }
};

struct UnipBasis {
  UnipCase which;
  std::vector<UnipLabel> labels;
  /// Position of a symbol (non-degenerate) in labels; throws DomainError.
  std::size_t index_of(const Symbol& sym) const;
};

/// Labels ordered by defect, then canonical symbol, then sign.
UnipBasis enumerate_unipotent(UnipCase c);

/// Principal-series symbol of an Irr(W) label: defect 0 for split cases
/// (|bp| = rank) and defect 2 for twisted cases (|bp| = rank - 1, λ on the
/// longer row). Returned in reduced form with the λ row first.
Symbol bipartition_to_symbol(const Bipartition& bp, UnipCase c);

/// Multiset key shared by the members of a family.
std::vector<int> family_key(const Symbol& sym);

struct FVector {
  std::string name;                 // f0, f1, f2
  std::vector<Symbol> members;      // print order
  std::vector<Rational> coefficients;  // one per member, each +-1/2
  /// Coefficient of a symbol, zero when it is not a member.
  Rational coefficient(const Symbol& sym) const;
  /// Dense vector over the case's unipotent basis.
  std::vector<Rational> over(const UnipBasis& basis) const;
};

/// f0 for D4 cases, f1 and f2 for D5 cases.
std::vector<FVector> f_basis(UnipCase c);

struct SymbolFamily {
  UnipCase which;
  int number;  // 1-based position among the families hosting f-vectors
  std::vector<Symbol> members;
  std::array<std::array<Rational, 4>, 4> matrix;
  int nonuniform_row;  // 0-based
  std::vector<std::string> roles;  // "non-uniform" or "uniform-span" per row
};

/// Fourier data of the family hosting f_basis(c)[number - 1]. Throws
/// DomainError for an unknown family number.
SymbolFamily family_fourier(UnipCase c, int number);

/// Number of 4-element families with Fourier data in the case.
int family_count(UnipCase c);

}  // namespace chartab
