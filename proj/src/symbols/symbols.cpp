#include "chartab/symbols.hpp"

#include <algorithm>

#include "chartab/error.hpp"

namespace chartab {

namespace {

std::string row_str(const std::vector<int>& row) {
  if (row.empty()) return "-";
  std::string out;
  for (int v : row) out += std::to_string(v);
  return out;
}

std::vector<int> parse_row(const std::string& seg, const std::string& text) {
  std::vector<int> row;
  if (seg == "-" || seg.empty()) return row;
  for (char c : seg) {
    if (c < '0' || c > '9') throw ParseError("invalid symbol '" + text + "'");
    row.push_back(c - '0');
  }
  if (!std::is_sorted(row.begin(), row.end()) || std::adjacent_find(row.begin(), row.end()) != row.end()) {
    throw ParseError("symbol rows must be strictly increasing in '" + text + "'");
  }
  return row;
}

struct FDef {
  UnipCase which;
  const char* name;
  std::array<const char*, 4> members;
  std::array<int, 4> signs;
};

// Member order and signs of every f-vector in scope.
const std::vector<FDef>& f_definitions() {
  static const std::vector<FDef> defs = {
      {UnipCase::D4Split, "f0", {"(13,02)", "(23,01)", "(12,03)", "(0123,-)"}, {1, -1, -1, 1}},
      {UnipCase::D4Twisted, "f0", {"(123,0)", "(012,3)", "(013,2)", "(023,1)"}, {1, -1, 1, -1}},
      {UnipCase::D5Split, "f1", {"(02,14)", "(12,04)", "(01,24)", "(0124,-)"}, {1, -1, -1, 1}},
      {UnipCase::D5Split, "f2", {"(013,124)", "(123,014)", "(012,134)", "(01234,1)"}, {1, -1, -1, 1}},
      {UnipCase::D5Twisted, "f1", {"(014,2)", "(012,4)", "(024,1)", "(124,0)"}, {1, -1, -1, 1}},
      {UnipCase::D5Twisted, "f2", {"(0124,13)", "(0123,14)", "(0134,12)", "(1234,01)"}, {1, -1, -1, 1}},
  };
  return defs;
}

}  // namespace

// ---------------------------------------------------------------------------
// Symbol

std::string Symbol::str() const { return "(" + row_str(S) + "," + row_str(T) + ")"; }

Symbol Symbol::parse(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') throw ParseError("invalid symbol '" + text + "'");
  s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
    throw ParseError("invalid symbol '" + text + "'");
  }
  return Symbol{parse_row(s.substr(0, comma), text), parse_row(s.substr(comma + 1), text)};
}

Symbol Symbol::reduced() const {
  Symbol r = *this;
  while (!r.S.empty() && !r.T.empty() && r.S.front() == 0 && r.T.front() == 0) {
    r.S.erase(r.S.begin());
    r.T.erase(r.T.begin());
    for (int& v : r.S) --v;
    for (int& v : r.T) --v;
  }
  return r;
}

Symbol Symbol::canonical() const {
  Symbol r = reduced();
  if (r.S.size() < r.T.size() || (r.S.size() == r.T.size() && r.T < r.S)) std::swap(r.S, r.T);
  return r;
}

bool Symbol::degenerate() const { return S == T; }

bool operator==(const Symbol& a, const Symbol& b) {
  const Symbol x = a.canonical();
  const Symbol y = b.canonical();
  return x.S == y.S && x.T == y.T;
}

bool operator<(const Symbol& a, const Symbol& b) {
  const Symbol x = a.canonical();
  const Symbol y = b.canonical();
  return x.S != y.S ? x.S < y.S : x.T < y.T;
}

std::pair<int, int> rank_defect(const Symbol& sym) {
  const Symbol r = sym.reduced();
  int sum = 0;
  for (int v : r.S) sum += v;
  for (int v : r.T) sum += v;
  const int m = static_cast<int>(r.S.size() + r.T.size());
  const int rank = sum - ((m - 1) * (m - 1)) / 4;
  const int defect = std::abs(static_cast<int>(r.S.size()) - static_cast<int>(r.T.size()));
  return {rank, defect};
}

// ---------------------------------------------------------------------------
// Cases and labels

UnipCase parse_unip_case(const std::string& text) {
  if (text == "D4-split") return UnipCase::D4Split;
  if (text == "D4-twisted") return UnipCase::D4Twisted;
  if (text == "D5-split") return UnipCase::D5Split;
  if (text == "D5-twisted") return UnipCase::D5Twisted;
  throw ParseError("unknown case '" + text + "' (expected D4-split, D4-twisted, D5-split or D5-twisted)");
}

std::string unip_case_name(UnipCase c) {
  switch (c) {
    case UnipCase::D4Split:
      return "D4-split";
    case UnipCase::D4Twisted:
      return "D4-twisted";
    case UnipCase::D5Split:
      return "D5-split";
    case UnipCase::D5Twisted:
      return "D5-twisted";
  }
  return "?";
}

int unip_rank(UnipCase c) { return (c == UnipCase::D4Split || c == UnipCase::D4Twisted) ? 4 : 5; }

bool unip_twisted(UnipCase c) { return c == UnipCase::D4Twisted || c == UnipCase::D5Twisted; }

std::string UnipLabel::str() const {
  if (sign == 0) return symbol.str();
  return symbol.str() + (sign > 0 ? "+" : "-");
}

std::size_t UnipBasis::index_of(const Symbol& sym) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].symbol == sym) {
      if (labels[i].sign != 0) throw DomainError("symbol " + sym.str() + " is degenerate; pick a sign");
      return i;
    }
  }
  throw DomainError("symbol " + sym.str() + " is not a label of " + unip_case_name(which));
}

UnipBasis enumerate_unipotent(UnipCase c) {
  const int n = unip_rank(c);
  const int residue = unip_twisted(c) ? 2 : 0;
  constexpr int kEntries = 10;
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << kEntries); ++mask) {
    std::vector<int> row;
    for (int v = 0; v < kEntries; ++v) {
      if (mask & (1u << v)) row.push_back(v);
    }
    subsets.push_back(row);
  }
  std::vector<std::pair<int, Symbol>> found;
  for (const auto& S : subsets) {
    for (const auto& T : subsets) {
      if (S.size() < T.size()) continue;
      if (S.size() == T.size() && T < S) continue;
      if (!S.empty() && !T.empty() && S.front() == 0 && T.front() == 0) continue;
      const Symbol sym{S, T};
      const auto [rank, defect] = rank_defect(sym);
      if (rank != n || defect % 4 != residue) continue;
      found.emplace_back(defect, sym);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  });
  UnipBasis basis{c, {}};
  for (const auto& [defect, sym] : found) {
    if (sym.degenerate()) {
      basis.labels.push_back(UnipLabel{sym, 1});
      basis.labels.push_back(UnipLabel{sym, -1});
    } else {
      basis.labels.push_back(UnipLabel{sym, 0});
    }
  }
  return basis;
}

Symbol bipartition_to_symbol(const Bipartition& bp, UnipCase c) {
  const int n = unip_rank(c);
  const int d = unip_twisted(c) ? 2 : 0;
  const int expected = unip_twisted(c) ? n - 1 : n;
  if (bp.size() != expected) {
    throw DomainError("bipartition " + bp.str() + " has size " + std::to_string(bp.size()) + ", expected " +
                      std::to_string(expected) + " for " + unip_case_name(c));
  }
  const int k = std::max(static_cast<int>(bp.mu.size()), static_cast<int>(bp.lambda.size()) - d);
  auto beta = [](const Partition& p, int len) {
    std::vector<int> asc(static_cast<std::size_t>(len), 0);
    for (std::size_t i = 0; i < p.size(); ++i) asc[static_cast<std::size_t>(len) - 1 - i] = p[i];
    for (int i = 0; i < len; ++i) asc[static_cast<std::size_t>(i)] += i;
    return asc;
  };
  return Symbol{beta(bp.lambda, k + d), beta(bp.mu, k)}.reduced();
}

std::vector<int> family_key(const Symbol& sym) {
  Symbol r = sym.reduced();
  const std::size_t target = 20 + (r.S.size() + r.T.size()) % 2;
  while (r.S.size() + r.T.size() < target) {
    for (int& v : r.S) ++v;
    for (int& v : r.T) ++v;
    r.S.insert(r.S.begin(), 0);
    r.T.insert(r.T.begin(), 0);
  }
  std::vector<int> key = r.S;
  key.insert(key.end(), r.T.begin(), r.T.end());
  std::sort(key.begin(), key.end());
  return key;
}

// ---------------------------------------------------------------------------
// f-vectors and Fourier matrices

Rational FVector::coefficient(const Symbol& sym) const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == sym) return coefficients[i];
  }
  return 0;
}

std::vector<Rational> FVector::over(const UnipBasis& basis) const {
  std::vector<Rational> out(basis.labels.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) out[basis.index_of(members[i])] = coefficients[i];
  return out;
}

std::vector<FVector> f_basis(UnipCase c) {
  std::vector<FVector> out;
  for (const auto& def : f_definitions()) {
    if (def.which != c) continue;
    FVector f;
    f.name = def.name;
    for (std::size_t i = 0; i < 4; ++i) {
      f.members.push_back(Symbol::parse(def.members[i]));
      f.coefficients.emplace_back(def.signs[i], 2);
    }
    out.push_back(std::move(f));
  }
  return out;
}

int family_count(UnipCase c) { return static_cast<int>(f_basis(c).size()); }

SymbolFamily family_fourier(UnipCase c, int number) {
  const auto fs = f_basis(c);
  if (number < 1 || number > static_cast<int>(fs.size())) {
    throw DomainError("unknown family " + std::to_string(number) + " for " + unip_case_name(c) + " (valid: 1.." +
                      std::to_string(fs.size()) + ")");
  }
  const FVector& f = fs[static_cast<std::size_t>(number - 1)];
  const auto key = family_key(f.members[0]);
  for (const auto& m : f.members) {
    if (family_key(m) != key) throw Inconsistent("f-vector " + f.name + " spans more than one family");
  }
  static const int kHadamard[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  SymbolFamily fam{c, number, f.members, {}, -1, {}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) fam.matrix[i][j] = Rational(kHadamard[i][j], 2);
  }
  for (int i = 0; i < 4; ++i) {
    bool match = true;
    for (int j = 0; j < 4; ++j) match = match && fam.matrix[i][j] == f.coefficients[static_cast<std::size_t>(j)];
    if (match) fam.nonuniform_row = i;
  }
  if (fam.nonuniform_row < 0) throw Inconsistent("no Fourier row matches " + f.name);
  for (int i = 0; i < 4; ++i) fam.roles.push_back(i == fam.nonuniform_row ? "non-uniform" : "uniform-span");
  return fam;
}

}  // namespace chartab
