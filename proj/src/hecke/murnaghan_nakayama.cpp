#include <algorithm>
#include <functional>
#include <set>

#include "chartab/error.hpp"
#include "chartab/hecke.hpp"

namespace chartab {

namespace {

struct Removal {
  Partition rest;
  int sign;
};

// All rim hooks of length k, via bead moves on a beta-set.
std::vector<Removal> remove_rim_hooks(const Partition& p, int k) {
  const int m = static_cast<int>(p.size());
  std::set<int> beads;
  for (int i = 0; i < m; ++i) beads.insert(p[static_cast<std::size_t>(i)] + (m - 1 - i));
  std::vector<Removal> out;
  for (int x : beads) {
    const int y = x - k;
    if (y < 0 || beads.count(y)) continue;
    int between = 0;
    for (int z : beads) between += (z > y && z < x) ? 1 : 0;
    std::vector<int> nb(beads.begin(), beads.end());
    *std::find(nb.begin(), nb.end(), x) = y;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    Partition rest;
    for (int i = 0; i < m; ++i) {
      const int part = nb[static_cast<std::size_t>(i)] - (m - 1 - i);
      if (part > 0) rest.push_back(part);
    }
    out.push_back(Removal{rest, between % 2 == 0 ? 1 : -1});
  }
  return out;
}

Rational mn(const Bipartition& bp, std::vector<std::pair<int, int>> cycles) {
  if (cycles.empty()) return bp.size() == 0 ? Rational(1) : Rational(0);
  const auto [k, eps] = cycles.back();
  cycles.pop_back();
  Rational total = 0;
  for (const auto& r : remove_rim_hooks(bp.lambda, k)) {
    total += r.sign * mn(Bipartition{r.rest, bp.mu}, cycles);
  }
  for (const auto& r : remove_rim_hooks(bp.mu, k)) {
    total += eps * r.sign * mn(Bipartition{bp.lambda, r.rest}, cycles);
  }
  return total;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> signed_cycle_type(const WElement& w) {
  const int n = w.rank();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> pos, neg;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    int sign = 1;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      const int v = w.image(j);
      if (v < 0) sign = -sign;
      j = v < 0 ? -v : v;
      ++len;
    }
    (sign > 0 ? pos : neg).push_back(len);
  }
  std::sort(pos.begin(), pos.end(), std::greater<int>());
  std::sort(neg.begin(), neg.end(), std::greater<int>());
  return {pos, neg};
}

Rational bn_character(const Bipartition& bp, const std::vector<int>& positive_cycles,
                      const std::vector<int>& negative_cycles) {
  int total = 0;
  std::vector<std::pair<int, int>> cycles;
  for (int c : positive_cycles) {
    cycles.emplace_back(c, 1);
    total += c;
  }
  for (int c : negative_cycles) {
    cycles.emplace_back(c, -1);
    total += c;
  }
  if (total != bp.size()) throw DomainError("cycle type and label " + bp.str() + " have different sizes");
  return mn(bp, cycles);
}

CycQ q1_specialize_check(const HeckeSpec& spec, const Bipartition& label, const std::vector<int>& word) {
  if (!(spec.Q.eval(1) == CycQ(1))) throw DomainError("Q must specialize to 1 at q = 1");
  const Bipartition bp = spec.check_label(label);
  const CycQ value = char_value(spec, bp, word).eval(1);
  WElement w;
  if (spec.kind == HeckeSpec::Kind::D) {
    w = word_to_element(CoxeterDatum::make(Family::D, spec.rank), word);
  } else {
    w = word_to_element(CoxeterDatum::make(Family::B, spec.b_rank()), spec.to_b_word(word));
  }
  const auto [pos, neg] = signed_cycle_type(w);
  const CycQ expected(bn_character(bp, pos, neg));
  if (value != expected) {
    throw Inconsistent("q = 1 value " + value.str() + " of " + bp.str() + " at " + word_str(word) +
                       " differs from the group character " + expected.str());
  }
  return value;
}

}  // namespace chartab
