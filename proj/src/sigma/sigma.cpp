#include "chartab/sigma.hpp"

#include <algorithm>
#include <map>

#include "chartab/error.hpp"

namespace chartab {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

// zeta_6^k = (-1)^k theta^(2k).
CycQ sixth_root(long k) {
  const long m = ((k % 6) + 6) % 6;
  CycQ v = CycQ::root_of_unity(2 * m);
  return m % 2 == 0 ? v : -v;
}

std::vector<GroupElem> image_of_lang_map(const CompGroup& g) {
  std::vector<GroupElem> img;
  for (const auto& x : g.elements()) {
    GroupElem y = g.add(x, g.neg(g.apply_frobenius(x)));
    if (std::find(img.begin(), img.end(), y) == img.end()) img.push_back(y);
  }
  return img;
}

std::vector<GroupElem> cyclic_span(const CompGroup& g, const GroupElem& x) {
  std::vector<GroupElem> out{GroupElem(g.orders.size(), 0)};
  GroupElem cur = x;
  while (std::find(out.begin(), out.end(), cur) == out.end()) {
    out.push_back(cur);
    cur = g.add(cur, x);
  }
  return out;
}

bool is_identity_matrix(const CompGroup& g) {
  for (std::size_t i = 0; i < g.orders.size(); ++i) {
    for (std::size_t j = 0; j < g.orders.size(); ++j) {
      if (mod(g.frobenius[i][j], g.orders[i]) != (i == j ? 1 % g.orders[i] : 0)) return false;
    }
  }
  return true;
}

std::size_t class_index(const ClassSplit& split, const std::string& label) {
  for (std::size_t i = 0; i < split.labels.size(); ++i) {
    if (split.labels[i] == label) return i;
  }
  throw DomainError("unknown class label " + label);
}

}  // namespace

// ---------------------------------------------------------------------------
// CompGroup

int CompGroup::size() const {
  int n = 1;
  for (int o : orders) n *= o;
  return n;
}

std::vector<GroupElem> CompGroup::elements() const {
  std::vector<GroupElem> out;
  const int n = size();
  out.reserve(static_cast<std::size_t>(n));
  for (int idx = 0; idx < n; ++idx) {
    GroupElem x(orders.size());
    int r = idx;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      x[i] = r % orders[i];
      r /= orders[i];
    }
    out.push_back(std::move(x));
  }
  return out;
}

int CompGroup::index_of(const GroupElem& x) const {
  if (x.size() != orders.size()) throw DomainError("element has the wrong number of coordinates");
  int idx = 0;
  for (std::size_t i = orders.size(); i-- > 0;) idx = idx * orders[i] + mod(x[i], orders[i]);
  return idx;
}

GroupElem CompGroup::add(const GroupElem& x, const GroupElem& y) const {
  GroupElem z(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) z[i] = mod(x[i] + y[i], orders[i]);
  return z;
}

GroupElem CompGroup::neg(const GroupElem& x) const {
  GroupElem z(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) z[i] = mod(-x[i], orders[i]);
  return z;
}

GroupElem CompGroup::apply_frobenius(const GroupElem& x) const {
  GroupElem z(orders.size(), 0);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < orders.size(); ++j) s += static_cast<long>(frobenius[i][j]) * x[j];
    z[i] = mod(static_cast<int>(s % orders[i]), orders[i]);
  }
  return z;
}

std::string CompGroup::name(const GroupElem& x) const {
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const int e = mod(x[i], orders[i]);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += factor_names[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

void CompGroup::validate() const {
  const std::size_t k = orders.size();
  if (k == 0) throw DomainError("component group needs at least one cyclic factor");
  for (int o : orders) {
    if (o < 1) throw DomainError("cyclic factor orders must be positive");
  }
  if (frobenius.size() != k || factor_names.size() != k || g0bar.size() != k) {
    throw DomainError("component group data has inconsistent dimensions");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (frobenius[i].size() != k) throw DomainError("Frobenius matrix must be square");
    for (std::size_t j = 0; j < k; ++j) {
      // x_j has order orders[j]; its image in factor i must be well defined.
      if ((static_cast<long>(frobenius[i][j]) * orders[j]) % orders[i] != 0) {
        throw DomainError("Frobenius matrix does not define a homomorphism");
      }
    }
  }
  std::vector<bool> hit(static_cast<std::size_t>(size()), false);
  for (const auto& x : elements()) hit[static_cast<std::size_t>(index_of(apply_frobenius(x)))] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw DomainError("Frobenius map is not bijective");
  if (apply_frobenius(g0bar) != add(g0bar, GroupElem(k, 0))) throw DomainError("g0bar is not fixed by F");
  if (a) {
    const auto g = cyclic_span(*this, g0bar);
    const auto h = cyclic_span(*this, *a);
    if (static_cast<int>(g.size() * h.size()) != size()) throw DomainError("A is not <g0bar> x <a>");
    for (const auto& x : g) {
      for (const auto& y : h) {
        if ((x != GroupElem(k, 0) || y != GroupElem(k, 0)) && x == y) throw DomainError("A is not <g0bar> x <a>");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Classes

ClassSplit split_classes(const SigmaDescriptor& desc) {
  const CompGroup& g = desc.group;
  g.validate();
  const auto elems = g.elements();
  const auto img = image_of_lang_map(g);
  ClassSplit out;
  out.class_of.assign(elems.size(), -1);
  for (const auto& x : elems) {
    if (out.class_of[static_cast<std::size_t>(g.index_of(x))] >= 0) continue;
    const int c = static_cast<int>(out.reps.size());
    out.reps.push_back(x);
    out.labels.push_back("C_" + g.name(x));
    for (const auto& i : img) out.class_of[static_cast<std::size_t>(g.index_of(g.add(x, i)))] = c;
  }

  std::vector<GroupElem> h;
  for (const auto& x : cyclic_span(g, g.g0bar)) {
    for (const auto& i : img) {
      GroupElem y = g.add(x, i);
      if (std::find(h.begin(), h.end(), y) == h.end()) h.push_back(y);
    }
  }
  std::vector<int> coset_of(elems.size(), -1);
  int cosets = 0;
  for (const auto& x : elems) {
    if (coset_of[static_cast<std::size_t>(g.index_of(x))] >= 0) continue;
    for (const auto& y : h) coset_of[static_cast<std::size_t>(g.index_of(g.add(x, y)))] = cosets;
    ++cosets;
  }
  for (const auto& r : out.reps) out.ss_tags.push_back("s" + std::to_string(coset_of[static_cast<std::size_t>(g.index_of(r))]));
  return out;
}

int fixed_point_count(const CompGroup& g) {
  int n = 0;
  for (const auto& x : g.elements()) n += g.apply_frobenius(x) == x ? 1 : 0;
  return n;
}

std::string twist(const SigmaDescriptor& desc, const std::string& label) {
  const auto split = split_classes(desc);
  const auto c = class_index(split, label);
  const auto moved = desc.group.add(desc.group.g0bar, split.reps[c]);
  return split.labels[static_cast<std::size_t>(split.class_of[static_cast<std::size_t>(desc.group.index_of(moved))])];
}

TablePtr class_table(const SigmaDescriptor& desc) {
  const auto split = split_classes(desc);
  std::vector<ClassRecord> recs;
  for (std::size_t i = 0; i < split.labels.size(); ++i) {
    recs.push_back(ClassRecord{split.labels[i], desc.centralizer, split.ss_tags[i], split.ss_tags[i]});
  }
  return make_table(std::move(recs));
}

// ---------------------------------------------------------------------------
// Characters

std::vector<LinearChar> linear_characters(const SigmaDescriptor& desc, bool nontrivial_on_g0) {
  const CompGroup& g = desc.group;
  g.validate();
  for (int o : g.orders) {
    if (6 % o != 0) throw DomainError("character values need roots of unity of order " + std::to_string(o));
  }
  const auto elems = g.elements();
  auto make = [&](const GroupElem& m) {
    LinearChar chi;
    chi.exponents = m;
    for (const auto& x : elems) {
      long k = 0;
      for (std::size_t i = 0; i < m.size(); ++i) k += static_cast<long>(m[i]) * x[i] * (6 / g.orders[i]);
      chi.values.push_back(sixth_root(k));
    }
    return chi;
  };
  // Exponent vectors in lexicographic order (last coordinate fastest).
  std::vector<GroupElem> exps = elems;
  std::sort(exps.begin(), exps.end());
  std::vector<LinearChar> out;
  std::vector<GroupElem> done;
  for (const auto& m : exps) {
    if (std::find(done.begin(), done.end(), m) != done.end()) continue;
    for (const auto& e : {m, g.neg(m)}) {
      if (std::find(done.begin(), done.end(), e) != done.end()) continue;
      done.push_back(e);
      LinearChar chi = make(e);
      if (nontrivial_on_g0 && chi.at(g, g.g0bar).is_one()) continue;
      chi.name = "psi" + std::to_string(out.size() + 1);
      out.push_back(std::move(chi));
    }
  }
  if (out.empty()) throw DomainError("no linear character satisfies the constraint");
  return out;
}

bool is_f_invariant(const SigmaDescriptor& desc, const LinearChar& psi) {
  const CompGroup& g = desc.group;
  const auto img = image_of_lang_map(g);
  for (const auto& x : g.elements()) {
    for (const auto& i : img) {
      if (psi.at(g, g.add(x, i)) != psi.at(g, x)) return false;
    }
  }
  return true;
}

ClassFunction characteristic_function(const SigmaDescriptor& desc, const LinearChar& psi) {
  if (!is_f_invariant(desc, psi)) {
    throw DomainError(psi.name + " is not constant on F-conjugacy classes; its character sheaf is not F-invariant");
  }
  const auto split = split_classes(desc);
  const PolQ scale = PolQ::monomial(1, desc.half_codim);
  std::vector<PolQ> values;
  for (const auto& r : split.reps) values.push_back(scale * psi.at(desc.group, r));
  return ClassFunction(class_table(desc), std::move(values));
}

CycQ twist_eigenvalue(const SigmaDescriptor& desc, const LinearChar& psi) {
  const ClassFunction chi = characteristic_function(desc, psi);
  const CycQ lambda = psi.at(desc.group, desc.group.g0bar);
  const auto& t = *chi.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const PolQ moved = chi.at(twist(desc, t[i].label));
    if (moved != chi[i] * lambda) {
      throw Inconsistent("twisting " + psi.name + " at " + t[i].label + " gives " + moved.str() + ", not " +
                         (chi[i] * lambda).str());
    }
  }
  return lambda;
}

std::vector<std::string> gamma_action(const SigmaDescriptor& desc) {
  const CompGroup& g = desc.group;
  if (!g.a) throw DomainError("gamma action needs a marked element a");
  if (!is_identity_matrix(g)) throw DomainError("gamma action is defined only when F acts trivially on A");
  const auto split = split_classes(desc);
  const auto gs = cyclic_span(g, g.g0bar);
  const auto as = cyclic_span(g, *g.a);
  std::vector<std::string> out;
  for (const auto& r : split.reps) {
    bool found = false;
    for (std::size_t i = 0; i < gs.size() && !found; ++i) {
      for (std::size_t j = 0; j < as.size() && !found; ++j) {
        if (g.add(gs[i], as[j]) != r) continue;
        const GroupElem image = g.add(gs[i], g.neg(as[j]));
        out.push_back(split.labels[static_cast<std::size_t>(split.class_of[static_cast<std::size_t>(g.index_of(image))])]);
        found = true;
      }
    }
    if (!found) throw Inconsistent("class representative " + g.name(r) + " is not in <g0bar> x <a>");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scenario data

SigmaDescriptor e6_descriptor(bool frobenius_trivial, bool twisted) {
  SigmaDescriptor d;
  d.name = twisted ? "2E6" : "E6";
  d.group.orders = {3, 3};
  d.group.frobenius = frobenius_trivial ? std::vector<std::vector<int>>{{1, 0}, {0, 1}}
                                        : std::vector<std::vector<int>>{{1, 0}, {0, 2}};
  d.group.factor_names = {"g0", "a"};
  d.group.g0bar = {1, 0};
  d.group.a = GroupElem{0, 1};
  d.half_codim = 3;
  d.centralizer = PolQ::monomial(fixed_point_count(d.group), 6);
  d.twisted = twisted;
  return d;
}

SigmaDescriptor d4_descriptor(bool twisted) {
  SigmaDescriptor d;
  d.name = twisted ? "2D4" : "D4";
  d.group.orders = {2};
  d.group.frobenius = {{1}};
  d.group.factor_names = {"g0"};
  d.group.g0bar = {1};
  d.half_codim = 2;
  d.centralizer = PolQ::monomial(2, 4);
  d.twisted = twisted;
  return d;
}

CharacterTable e6_linear_character_table() {
  const auto desc = e6_descriptor(true);
  CharacterTable t;
  for (const auto& x : desc.group.elements()) t.column_names.push_back(desc.group.name(x));
  for (const auto& psi : linear_characters(desc, true)) {
    t.row_names.push_back(psi.name);
    t.values.push_back(psi.values);
  }
  return t;
}

BasisTable prop53_table() {
  const auto desc = e6_descriptor(false);
  BasisTable out{"E6, F nontrivial on A: F-invariant cuspidal characteristic functions", {}, {}, class_table(desc)};
  int k = 1;
  for (const auto& psi : linear_characters(desc, true)) {
    if (!is_f_invariant(desc, psi)) continue;
    out.row_names.push_back("chi_" + std::to_string(k++));
    out.rows.push_back(characteristic_function(desc, psi));
  }
  return out;
}

BasisTable e6_full_support_rows() {
  const auto desc = e6_descriptor(true);
  const auto table = class_table(desc);
  const auto psis = linear_characters(desc, true);
  return BasisTable{"E6, F trivial on A: full-support rows",
                    {"chi_0", "chi_1", "chi_2"},
                    {constant(table, 1), characteristic_function(desc, psis[0]), characteristic_function(desc, psis[1])},
                    table};
}

CosetCharacters e6_coset_characters() {
  const auto table = class_table(e6_descriptor(true));
  CosetCharacters out;
  for (int i = 0; i < 3; ++i) {
    std::vector<PolQ> values;
    for (const auto& c : table->classes()) {
      const int j = std::stoi(c.coset.substr(1));
      values.emplace_back(CycQ::root_of_unity(static_cast<long>(i) * j));
    }
    out.lambdas.emplace_back(table, std::move(values));
    std::vector<CycQ> at;
    for (int j = 0; j < 3; ++j) at.push_back(CycQ::root_of_unity(static_cast<long>(i) * j));
    out.at_tag.push_back(std::move(at));
  }
  return out;
}

namespace {

std::vector<std::string> ss_tags_in_order(const TablePtr& table) {
  std::vector<std::string> tags;
  for (const auto& c : table->classes()) {
    if (std::find(tags.begin(), tags.end(), c.ss_part) == tags.end()) tags.push_back(c.ss_part);
  }
  return tags;
}

std::string sub_tag(const std::string& tag) { return "s_" + tag.substr(1); }

BasisTable three_class_table() {
  const auto desc = e6_descriptor(false);
  const auto chi = prop53_table();
  return BasisTable{"|A^F| = 3", {"chi_0", "chi_1", "chi_2"}, {constant(chi.table, 1), chi.rows[0], chi.rows[1]}, chi.table};
}

}  // namespace

BasisTable e6_basis_table_direct(bool frobenius_trivial) {
  if (!frobenius_trivial) return three_class_table();
  const auto full = e6_full_support_rows();
  BasisTable out{"|A^F| = 9", {}, {}, full.table};
  for (const auto& tag : ss_tags_in_order(full.table)) {
    const auto ind = ss_indicator(full.table, tag);
    for (std::size_t k = 0; k < full.rows.size(); ++k) {
      out.row_names.push_back(full.row_names[k] + "^(" + sub_tag(tag) + ")");
      out.rows.push_back(pointwise_mul(full.rows[k], ind));
    }
  }
  return out;
}

BasisTable e6_basis_table(bool frobenius_trivial) {
  const BasisTable direct = e6_basis_table_direct(frobenius_trivial);
  BasisTable out{direct.title, {}, {}, direct.table};
  if (!frobenius_trivial) {
    // A single semisimple part: the average over the trivial character.
    const ClassFunction one = constant(direct.table, 1);
    for (std::size_t k = 0; k < direct.rows.size(); ++k) {
      out.row_names.push_back(direct.row_names[k]);
      out.rows.push_back(coset_average(direct.rows[k], "s0", {one}, {CycQ(1)}));
    }
  } else {
    const auto full = e6_full_support_rows();
    const auto lam = e6_coset_characters();
    const auto tags = ss_tags_in_order(full.table);
    for (std::size_t j = 0; j < tags.size(); ++j) {
      std::vector<CycQ> at_s;
      for (const auto& row : lam.at_tag) at_s.push_back(row[j]);
      for (std::size_t k = 0; k < full.rows.size(); ++k) {
        out.row_names.push_back(full.row_names[k] + "^(" + sub_tag(tags[j]) + ")");
        out.rows.push_back(coset_average(full.rows[k], tags[j], lam.lambdas, at_s));
      }
    }
  }
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    if (out.row_names[r] != direct.row_names[r] || out.rows[r] != direct.rows[r]) {
      throw Inconsistent("averaged row " + out.row_names[r] + " differs from the direct restriction");
    }
  }
  return out;
}

BasisTable d4_table(bool twisted) {
  const auto desc = d4_descriptor(twisted);
  const auto table = class_table(desc);
  const auto psis = linear_characters(desc, true);
  return BasisTable{twisted ? "2D4 regular unipotent classes" : "D4 regular unipotent classes",
                    {"eps_O0", twisted ? "f0'" : "chi_A0"},
                    {constant(table, 1), characteristic_function(desc, psis[0])},
                    table};
}

namespace {

bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

E6Scenario e6_scenario(long q, bool twisted) {
  if (!is_prime_power(q)) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  if (q % 3 == 0) throw DomainError("q = " + std::to_string(q) + " is divisible by 3");
  E6Scenario s;
  s.q = q;
  s.twisted = twisted;
  s.k_action_trivial = twisted ? (q + 1) % 3 == 0 : (q - 1) % 3 == 0;
  const auto desc = e6_descriptor(s.k_action_trivial, twisted);
  s.class_count = static_cast<int>(split_classes(desc).labels.size());
  s.cf_dimension = s.class_count;
  for (const auto& psi : linear_characters(desc, true)) s.f_invariant_cuspidal += is_f_invariant(desc, psi) ? 1 : 0;
  if (s.k_action_trivial) {
    s.marked_element_note =
        "a is a declared input chosen so that gamma(C_{g0^i a}) = C_{g0^i a^2}; this choice is recorded, not derived";
  }
  s.table = e6_basis_table(s.k_action_trivial);
  return s;
}

std::vector<FrobeniusCandidate> frobenius_candidates() {
  const SigmaDescriptor ref = e6_descriptor(false);
  const auto ref_split = split_classes(ref);
  const CompGroup& g = ref.group;

  // Automorphisms of A fixing g0bar: x -> (x0 + c x1, e x1), e != 0.
  std::vector<std::vector<std::vector<int>>> stabiliser;
  for (int c = 0; c < 3; ++c) {
    for (int e = 1; e < 3; ++e) stabiliser.push_back({{1, c}, {0, e}});
  }

  std::vector<FrobeniusCandidate> out;
  for (int b = 0; b < 3; ++b) {
    for (int d = 0; d < 3; ++d) {
      SigmaDescriptor cand = ref;
      cand.group.frobenius = {{1, b}, {0, d}};
      if (d == 0) continue;  // not invertible: F(g0bar) = g0bar forces the first column
      if (fixed_point_count(cand.group) != 3) continue;
      const auto split = split_classes(cand);
      FrobeniusCandidate fc;
      fc.matrix = cand.group.frobenius;
      const int c0 = split.class_of[static_cast<std::size_t>(g.index_of({0, 0}))];
      const int c1 = split.class_of[static_cast<std::size_t>(g.index_of({1, 0}))];
      const int c2 = split.class_of[static_cast<std::size_t>(g.index_of({2, 0}))];
      fc.g0_powers_distinct = c0 != c1 && c1 != c2 && c0 != c2;
      for (const auto& phi : stabiliser) {
        CompGroup map = g;
        map.frobenius = phi;
        // phi must carry each candidate class onto a reference class.
        std::map<int, int> image_class;
        bool ok = true;
        for (const auto& x : g.elements()) {
          const int from = split.class_of[static_cast<std::size_t>(g.index_of(x))];
          const int to = ref_split.class_of[static_cast<std::size_t>(g.index_of(map.apply_frobenius(x)))];
          auto [it, inserted] = image_class.emplace(from, to);
          if (!inserted && it->second != to) ok = false;
        }
        if (ok && image_class.size() == ref_split.labels.size()) fc.isomorphic_to_reference = true;
      }
      out.push_back(std::move(fc));
    }
  }
  return out;
}

}  // namespace chartab
