#pragma once

// The Bruhat-cell counting identity evaluated on the Hecke side, the X/Y
// expansion of f1 and f2 at the unipotent classes 82 and 6211 of D5, and the
// sign determination that fixes the representatives u_(82), u_(6211).

#include <optional>
#include <string>
#include <vector>

#include "chartab/exactnum.hpp"
#include "chartab/hecke.hpp"
#include "chartab/symbols.hpp"

namespace chartab {

enum class ClassTag { C82, C6211 };

std::string class_tag_name(ClassTag tag);
ClassTag parse_class_tag(const std::string& text);

struct PhiRecord {
  Bipartition label;
  PolQ hecke;    // phi_q(T_w)
  PolQ f_unif;   // uniform part of [phi] at u
  Rational a1;   // coefficient of f1 in [phi]
  Rational a2;   // coefficient of f2 in [phi]
};

struct StarInstance {
  UnipCase which;  // D5Split or D5Twisted
  ClassTag tag;
  std::vector<int> word;
  std::vector<PhiRecord> records;  // every irreducible character of W^F
};

/// gamma for the pairs (82,-1) and (6211,-1); unset until solved.
struct SignState {
  std::optional<int> gamma_82;
  std::optional<int> gamma_6211;
};

/// The uniform parts f_unif(phi)(u), keyed by label. Throws DomainError for a
/// case outside D5-split / D5-twisted.
std::vector<std::pair<Bipartition, PolQ>> f_unif_values(UnipCase c, ClassTag tag);

/// The Coxeter-type word used for the tag: s1...s5 for 82, s1...s4 for 6211.
std::vector<int> star_word(ClassTag tag);

/// Hecke values, uniform parts and f-coefficients for every phi.
StarInstance make_instance(UnipCase c, ClassTag tag);

/// (f1(u), f2(u)) with Y = gamma * Y0 and Y0(u) = y0 on the tag's class.
std::pair<PolQ, PolQ> xy_expand_with(ClassTag tag, const CycQ& gamma, int y0);
/// As above with the solved sign; DomainError when the sign is unset.
std::pair<PolQ, PolQ> xy_expand(ClassTag tag, const SignState& signs, int y0);

/// sum_phi phi_q(T_w) (f_unif(phi)(u) + a1 f1(u) + a2 f2(u)).
PolQ rhs_star_with(const StarInstance& inst, const CycQ& gamma, int y0);
PolQ rhs_star(const StarInstance& inst, const SignState& signs, int y0);

/// sum_phi phi_q(T_w) f_unif(phi)(u).
PolQ uniform_part(const StarInstance& inst);

struct TagSolution {
  ClassTag tag;
  std::vector<int> word;
  std::vector<CycQ> admissible;  // sixth roots of unity keeping rhs real
  int gamma = 0;
  PolQ uniform;
  PolQ rhs_plus;   // y0 = +1
  PolQ rhs_minus;  // y0 = -1
  std::string representative;
  std::string criterion;
};

struct Table4 {
  std::vector<std::string> row_names;     // f1, f2
  std::vector<std::string> column_names;  // u_(82), u_(82)', u_(6211), u_(6211)', other
  std::vector<std::vector<PolQ>> values;
};

struct SignSolution {
  UnipCase which;
  SignState signs;
  std::vector<TagSolution> tags;
  Table4 table;
};

/// Needs one instance per tag, all of the same case. For each tag keeps the
/// sixth roots of unity gamma for which rhs_star is real at both y0 = +-1,
/// requires them to be exactly +-1 and adopts +1. Checks that the
/// non-uniform contribution at gamma = y0 = 1 equals the uniform part.
/// Throws Inconsistent on any failed check.
SignSolution solve_signs(const std::vector<StarInstance>& instances);

}  // namespace chartab
