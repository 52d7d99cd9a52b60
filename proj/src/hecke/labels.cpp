#include <algorithm>
#include <functional>

#include "chartab/error.hpp"
#include "chartab/hecke.hpp"

namespace chartab {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n < 0) return out;
  rec(n, n);
  return out;
}

int Bipartition::size() const {
  int s = 0;
  for (int p : lambda) s += p;
  for (int p : mu) s += p;
  return s;
}

std::string Bipartition::str() const {
  std::string out;
  for (int p : lambda) out += std::to_string(p);
  out += '.';
  for (int p : mu) out += std::to_string(p);
  return out;
}

Bipartition Bipartition::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')') s += c;
  }
  const auto dot = s.find('.');
  if (dot == std::string::npos || s.find('.', dot + 1) != std::string::npos) {
    throw ParseError("bipartition label needs exactly one '.': '" + text + "'");
  }
  auto parts = [&](const std::string& seg) {
    Partition p;
    for (char c : seg) {
      if (c < '1' || c > '9') throw ParseError("invalid part in bipartition label '" + text + "'");
      p.push_back(c - '0');
    }
    if (!std::is_sorted(p.begin(), p.end(), std::greater<int>())) {
      throw ParseError("parts must be weakly decreasing in '" + text + "'");
    }
    return p;
  };
  return Bipartition{parts(s.substr(0, dot)), parts(s.substr(dot + 1))};
}

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a) {
    for (const auto& l : partitions(a)) {
      for (const auto& m : partitions(n - a)) out.push_back(Bipartition{l, m});
    }
  }
  return out;
}

std::vector<Bipartition> d_labels(int n) {
  std::vector<Bipartition> out;
  const auto all = bipartitions(n);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& bp = all[i];
    if (bp.lambda == bp.mu) continue;
    const Bipartition swapped{bp.mu, bp.lambda};
    const auto j = static_cast<std::size_t>(std::find(all.begin(), all.end(), swapped) - all.begin());
    if (i < j) out.push_back(bp);
  }
  return out;
}

}  // namespace chartab
