#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "chartab/coxeter.hpp"
#include "chartab/error.hpp"

namespace chartab {

namespace {

Packed lane_byte(int index, bool negative) {
  return static_cast<Packed>(index) | (negative ? 0x80u : 0u);
}

Packed sign_flip_first() { return kIdentityPacked ^ 0x80ULL; }

int min_rank(Family f) { return f == Family::B ? 1 : 2; }

const char* family_name(Family f) { return f == Family::B ? "B" : "D"; }

}  // namespace

// ---------------------------------------------------------------------------
// WElement

WElement WElement::identity(int rank) {
  if (rank < 0 || rank > kMaxRank) throw DomainError("rank out of range: " + std::to_string(rank));
  return WElement(kIdentityPacked, rank);
}

WElement WElement::from_window(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n > kMaxRank) throw DomainError("rank out of range: " + std::to_string(n));
  Packed p = kIdentityPacked;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    const int a = v < 0 ? -v : v;
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a - 1)]) {
      throw DomainError("not a signed permutation window");
    }
    seen[static_cast<std::size_t>(a - 1)] = true;
    p &= ~(static_cast<Packed>(0xFF) << (8 * i));
    p |= lane_byte(a - 1, v < 0) << (8 * i);
  }
  return WElement(p, n);
}

int WElement::image(int i) const {
  if (i < 1 || i > rank_) throw DomainError("position out of range");
  const unsigned b = static_cast<unsigned>(p_ >> (8 * (i - 1))) & 0xFFu;
  const int v = static_cast<int>(b & 0x0Fu) + 1;
  return (b & 0x80u) ? -v : v;
}

std::vector<int> WElement::window() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(rank_));
  for (int i = 1; i <= rank_; ++i) out.push_back(image(i));
  return out;
}

int WElement::negatives() const {
  int c = 0;
  for (int i = 1; i <= rank_; ++i) c += image(i) < 0 ? 1 : 0;
  return c;
}

WElement WElement::inverse() const {
  std::vector<int> inv(static_cast<std::size_t>(rank_));
  for (int i = 1; i <= rank_; ++i) {
    const int v = image(i);
    const int a = v < 0 ? -v : v;
    inv[static_cast<std::size_t>(a - 1)] = v < 0 ? -i : i;
  }
  return from_window(inv);
}

WElement operator*(const WElement& w, const WElement& v) {
  if (w.rank_ != v.rank_) throw DomainError("rank mismatch in product");
  return WElement(compose_packed(w.p_, v.p_), w.rank_);
}

std::string WElement::window_str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= rank_; ++i) os << (i > 1 ? "," : "") << image(i);
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Length

int length_by_roots(Family family, const WElement& w) {
  const int n = w.rank();
  // A vector is positive when its nonzero coefficient of highest index is
  // positive. Roots are listed as (i, ci, j, cj) meaning ci*e_i + cj*e_j.
  auto apply = [&](int i) {
    const int v = w.image(i);
    return std::pair<int, int>{v < 0 ? -v : v, v < 0 ? -1 : 1};
  };
  auto positive = [](int i, int ci, int j, int cj) {
    if (j == 0) return ci > 0;
    if (i > j) return ci > 0;
    return cj > 0;
  };
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (family == Family::B) {
      auto [a, sa] = apply(i);
      if (!positive(a, sa, 0, 0)) ++count;
    }
    for (int j = i + 1; j <= n; ++j) {
      auto [a, sa] = apply(i);
      auto [b, sb] = apply(j);
      if (!positive(a, -sa, b, sb)) ++count;  // e_j - e_i
      if (!positive(a, sa, b, sb)) ++count;   // e_j + e_i
    }
  }
  return count;
}

int length(Family family, const WElement& w) {
  Packed p = w.packed();
  int out = 0;
  scalar_kernels().length(family, &p, &out, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Datum

CoxeterDatum CoxeterDatum::make(Family family, int rank) {
  if (rank < min_rank(family) || rank > kMaxRank) {
    throw DomainError(std::string("unsupported rank for type ") + family_name(family) + ": " +
                      std::to_string(rank));
  }
  CoxeterDatum d;
  d.family = family;
  d.rank = rank;
  return d;
}

CoxeterDatum CoxeterDatum::twisted_d(int rank) {
  CoxeterDatum d = make(Family::D, rank);
  d.automorphism.resize(static_cast<std::size_t>(rank));
  std::iota(d.automorphism.begin(), d.automorphism.end(), 1);
  std::swap(d.automorphism[0], d.automorphism[1]);
  return d;
}

CoxeterDatum CoxeterDatum::parse(const std::string& text) {
  std::string s = text;
  bool tw = false;
  if (!s.empty() && s[0] == '2') {
    tw = true;
    s = s.substr(1);
  }
  if (s.size() < 2 || (s[0] != 'B' && s[0] != 'D' && s[0] != 'b' && s[0] != 'd')) {
    throw ParseError("expected a type such as B4, D5 or 2D5, got '" + text + "'");
  }
  const Family f = (s[0] == 'B' || s[0] == 'b') ? Family::B : Family::D;
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("expected a type such as B4, D5 or 2D5, got '" + text + "'");
  }
  if (tw) {
    if (f != Family::D) throw DomainError("only type D carries a diagram automorphism");
    return twisted_d(rank);
  }
  return make(f, rank);
}

bool CoxeterDatum::twisted() const {
  for (std::size_t i = 0; i < automorphism.size(); ++i) {
    if (automorphism[i] != static_cast<int>(i) + 1) return true;
  }
  return false;
}

int CoxeterDatum::sigma(int label) const {
  if (label < 1 || label > rank) throw DomainError("invalid generator label " + std::to_string(label));
  if (automorphism.empty()) return label;
  return automorphism[static_cast<std::size_t>(label - 1)];
}

std::string CoxeterDatum::name() const {
  return std::string(twisted() ? "2" : "") + family_name(family) + std::to_string(rank);
}

// ---------------------------------------------------------------------------
// Generators and words

std::vector<WElement> generators(const CoxeterDatum& d) {
  const int n = d.rank;
  std::vector<WElement> gens;
  auto transposition = [n](int i, int j, bool negated) {
    std::vector<int> win(static_cast<std::size_t>(n));
    std::iota(win.begin(), win.end(), 1);
    win[static_cast<std::size_t>(i - 1)] = negated ? -j : j;
    win[static_cast<std::size_t>(j - 1)] = negated ? -i : i;
    return WElement::from_window(win);
  };
  if (d.family == Family::B) {
    gens.push_back(WElement::from_packed(sign_flip_first(), n));
    for (int k = 2; k <= n; ++k) gens.push_back(transposition(k - 1, k, false));
  } else {
    gens.push_back(transposition(1, 2, false));
    gens.push_back(transposition(1, 2, true));
    for (int k = 3; k <= n; ++k) gens.push_back(transposition(k - 1, k, false));
  }
  return gens;
}

std::vector<std::vector<int>> coxeter_matrix(const CoxeterDatum& d) {
  const int n = d.rank;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  auto set = [&](int a, int b, int v) {
    m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = v;
    m[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = v;
  };
  for (int i = 1; i <= n; ++i) set(i, i, 1);
  if (d.family == Family::B) {
    if (n >= 2) set(1, 2, 4);
    for (int k = 2; k < n; ++k) set(k, k + 1, 3);
  } else {
    if (n >= 3) {
      set(1, 3, 3);
      set(2, 3, 3);
    }
    for (int k = 3; k < n; ++k) set(k, k + 1, 3);
  }
  return m;
}

WElement apply_automorphism(const CoxeterDatum& d, const WElement& w) {
  if (!d.twisted()) return w;
  // The fork swap is conjugation by the sign change at position 1.
  const Packed t = sign_flip_first();
  return WElement::from_packed(compose_packed(compose_packed(t, w.packed()), t), w.rank());
}

WElement word_to_element(const CoxeterDatum& d, const std::vector<int>& word) {
  const auto gens = generators(d);
  WElement w = WElement::identity(d.rank);
  for (int s : word) {
    if (s < 1 || s > d.rank) throw DomainError("invalid generator label " + std::to_string(s) + " for " + d.name());
    w = w * gens[static_cast<std::size_t>(s - 1)];
  }
  return w;
}

std::vector<int> reduced_word(const CoxeterDatum& d, const WElement& w) {
  const auto gens = generators(d);
  std::vector<int> word;
  WElement cur = w;
  int len = length(d.family, cur);
  while (len > 0) {
    bool found = false;
    for (int s = 1; s <= d.rank; ++s) {
      WElement next = gens[static_cast<std::size_t>(s - 1)] * cur;
      const int l = length(d.family, next);
      if (l < len) {
        word.push_back(s);
        cur = next;
        len = l;
        found = true;
        break;
      }
    }
    if (!found) throw Inconsistent("no descent found for " + cur.window_str());
  }
  return word;
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += "*";
    out += "s" + std::to_string(word[i]);
  }
  return out;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&]() {
    std::string t;
    for (char c : token) {
      if (c != ' ' && c != '\t') t += c;
    }
    token.clear();
    if (t.empty() || t == "e") return;
    if (t[0] == 's') t = t.substr(1);
    try {
      std::size_t used = 0;
      const int v = std::stoi(t, &used);
      if (used != t.size()) throw ParseError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("invalid generator in word '" + text + "'");
    }
  };
  for (char c : text) {
    if (c == ',' || c == '*') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

std::size_t group_order(Family family, int rank) {
  std::size_t order = 1;
  for (int k = 2; k <= rank; ++k) order *= static_cast<std::size_t>(k);
  const int signs = family == Family::B ? rank : rank - 1;
  return order << signs;
}

// ---------------------------------------------------------------------------
// Enumeration

CoxeterGroup::CoxeterGroup(CoxeterDatum d) : datum_(std::move(d)) {
  const std::size_t expected = group_order(datum_.family, datum_.rank);
  if (expected > kMaxGroupOrder) {
    throw DomainError("group " + datum_.name() + " has order " + std::to_string(expected) +
                      ", above the enumeration bound " + std::to_string(kMaxGroupOrder));
  }
  const auto& kern = active_kernels();
  std::vector<Packed> gens;
  for (const auto& g : generators(datum_)) gens.push_back(g.packed());

  std::unordered_map<Packed, std::size_t> seen;
  seen.reserve(expected * 2);
  std::vector<Packed> all{kIdentityPacked};
  seen.emplace(kIdentityPacked, 0);
  std::vector<Packed> frontier{kIdentityPacked};
  std::vector<Packed> scratch;
  while (!frontier.empty()) {
    std::vector<Packed> next;
    scratch.resize(frontier.size());
    for (Packed s : gens) {
      kern.mul_right(frontier.data(), s, scratch.data(), frontier.size());
      for (Packed p : scratch) {
        if (seen.emplace(p, 0).second) {
          all.push_back(p);
          next.push_back(p);
        }
      }
    }
    frontier.swap(next);
  }
  if (all.size() != expected) {
    throw Inconsistent("enumerated " + std::to_string(all.size()) + " elements of " + datum_.name() +
                       ", expected " + std::to_string(expected));
  }

  std::vector<int> lens(all.size());
  kern.length(datum_.family, all.data(), lens.data(), all.size());
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lens[a] != lens[b] ? lens[a] < lens[b] : all[a] < all[b];
  });
  elements_.reserve(all.size());
  lengths_.reserve(all.size());
  for (std::size_t i : order) {
    index_.emplace(all[i], elements_.size());
    elements_.push_back(all[i]);
    lengths_.push_back(lens[i]);
  }
}

std::shared_ptr<const CoxeterGroup> CoxeterGroup::get(const CoxeterDatum& d) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const CoxeterGroup>> cache;
  const std::string key = d.name();
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto g = std::make_shared<const CoxeterGroup>(d);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(g)).first->second;
}

std::size_t CoxeterGroup::index_of(Packed p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw DomainError("element not in " + datum_.name());
  return it->second;
}

// ---------------------------------------------------------------------------
// F-conjugacy

ClassPartition f_conjugacy_classes(const CoxeterGroup& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const auto& d = g.datum();
  const auto gens = generators(d);
  const auto& kern = active_kernels();
  std::vector<Packed> image(n);
  for (int s = 1; s <= d.rank; ++s) {
    const Packed sp = gens[static_cast<std::size_t>(s - 1)].packed();
    const Packed fs = gens[static_cast<std::size_t>(d.sigma(s) - 1)].packed();
    kern.twisted_conj(sp, fs, g.packed().data(), image.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = find(i);
      std::size_t b = find(g.index_of(image[i]));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  ClassPartition out;
  out.class_of.assign(n, -1);
  std::vector<int> root_class(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (root_class[r] < 0) {
      root_class[r] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.class_of[i] = root_class[r];
    out.classes[static_cast<std::size_t>(root_class[r])].push_back(i);
  }
  return out;
}

}  // namespace chartab
