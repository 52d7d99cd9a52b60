#include <doctest.h>

#include <set>

#include "chartab/error.hpp"
#include "chartab/sigma.hpp"

using namespace chartab;

namespace {

const PolQ q3 = PolQ::monomial(1, 3);
CycQ th(int k) { return CycQ::root_of_unity(k); }

const std::vector<std::string> kNine{"C_1",   "C_g0",     "C_g0^2",   "C_a",       "C_g0*a",
                                     "C_g0^2*a", "C_a^2", "C_g0*a^2", "C_g0^2*a^2"};

// Powers of theta, read off the printed table of the six characters that are
// nontrivial on <g0bar>; columns 1, g0, g0^2, a, g0 a, g0^2 a, a^2, g0 a^2, g0^2 a^2.
const int kTable1[6][9] = {
    {0, 1, 2, 0, 1, 2, 0, 1, 2}, {0, 2, 1, 0, 2, 1, 0, 2, 1}, {0, 1, 2, 1, 2, 0, 2, 0, 1},
    {0, 2, 1, 2, 1, 0, 1, 0, 2}, {0, 1, 2, 2, 0, 1, 1, 2, 0}, {0, 2, 1, 1, 0, 2, 2, 1, 0},
};

// chi_0 = 1, chi_1 = q^3 theta^i, chi_2 = q^3 theta^(2i) on the class g0bar^i x.
PolQ chi_value(int k, int i) { return k == 0 ? PolQ(1) : q3 * th(k * i); }

// F-classes of C3 x C3 under the matrix m, by brute force orbits.
std::vector<int> brute_classes(const std::vector<std::vector<int>>& m) {
  auto idx = [](int x, int y) { return x + 3 * y; };
  std::vector<int> cls(9, -1);
  int next = 0;
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) {
      if (cls[static_cast<std::size_t>(idx(x, y))] >= 0) continue;
      for (int by = 0; by < 3; ++by) {
        for (int bx = 0; bx < 3; ++bx) {
          const int fx = (m[0][0] * bx + m[0][1] * by) % 3;
          const int fy = (m[1][0] * bx + m[1][1] * by) % 3;
          const int nx = ((x + bx - fx) % 3 + 3) % 3;
          const int ny = ((y + by - fy) % 3 + 3) % 3;
          cls[static_cast<std::size_t>(idx(nx, ny))] = next;
        }
      }
      ++next;
    }
  }
  return cls;
}

}  // namespace

TEST_CASE("component group basics") {
  const auto desc = e6_descriptor(true);
  const CompGroup& g = desc.group;
  CHECK(g.size() == 9);
  const auto el = g.elements();
  REQUIRE(el.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) CHECK("C_" + g.name(el[i]) == kNine[i]);
  CHECK(g.index_of(g.add(el[1], el[1])) == 2);
  CHECK(g.index_of(g.neg(el[4])) == 8);
  CHECK_NOTHROW(g.validate());
  CompGroup bad = g;
  bad.frobenius = {{0, 1}, {1, 0}};  // moves g0bar
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("class splitting for the two Frobenius actions") {
  const auto split = split_classes(e6_descriptor(true));
  CHECK(split.labels == kNine);
  CHECK(split.ss_tags == std::vector<std::string>{"s0", "s0", "s0", "s1", "s1", "s1", "s2", "s2", "s2"});
  const auto desc = e6_descriptor(false);
  const auto nontrivial = split_classes(desc);
  CHECK(nontrivial.labels == std::vector<std::string>{"C_1", "C_g0", "C_g0^2"});
  CHECK(fixed_point_count(desc.group) == 3);
  CHECK(fixed_point_count(e6_descriptor(true).group) == 9);
  // The number of F-classes equals the number of fixed points.
  CHECK(static_cast<int>(nontrivial.labels.size()) == fixed_point_count(desc.group));
  CHECK(nontrivial.class_of == brute_classes(desc.group.frobenius));
}

TEST_CASE("twisting operator") {
  const auto desc = e6_descriptor(true);
  CHECK(twist(desc, "C_1") == "C_g0");
  CHECK(twist(desc, "C_g0^2") == "C_1");
  CHECK(twist(desc, "C_a") == "C_g0*a");
  CHECK(twist(desc, "C_g0^2*a^2") == "C_a^2");
  CHECK_THROWS_AS(twist(desc, "C_b"), DomainError);
  CHECK(twist(d4_descriptor(), "C_1") == "C_g0");
}

TEST_CASE("table of linear characters nontrivial on g0bar") {
  const auto t = e6_linear_character_table();
  REQUIRE(t.values.size() == 6);
  CHECK(t.row_names == std::vector<std::string>{"psi1", "psi2", "psi3", "psi4", "psi5", "psi6"});
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 9; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(t.values[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == th(kTable1[r][c]));
    }
  }
  const auto chars = linear_characters(e6_descriptor(true), true);
  REQUIRE(chars.size() == 6);
  for (std::size_t r = 0; r < 6; r += 2) {
    for (std::size_t c = 0; c < 9; ++c) CHECK(chars[r + 1].values[c] == chars[r].values[c].conj());
  }
  CHECK(linear_characters(e6_descriptor(true), false).size() == 9);
}

TEST_CASE("F-invariant characters and characteristic functions") {
  const auto trivial = e6_descriptor(true);
  int invariant = 0;
  for (const auto& psi : linear_characters(trivial, true)) invariant += is_f_invariant(trivial, psi);
  CHECK(invariant == 6);
  const auto nontrivial = e6_descriptor(false);
  std::vector<std::string> names;
  for (const auto& psi : linear_characters(nontrivial, true)) {
    if (is_f_invariant(nontrivial, psi)) names.push_back(psi.name);
  }
  CHECK(names == std::vector<std::string>{"psi1", "psi2"});
  const auto chars = linear_characters(nontrivial, true);
  CHECK_THROWS_AS(characteristic_function(nontrivial, chars[2]), DomainError);
  const ClassFunction chi = characteristic_function(trivial, linear_characters(trivial, true)[2]);
  for (int c = 0; c < 9; ++c) CHECK(chi[static_cast<std::size_t>(c)] == q3 * th(kTable1[2][c]));
}

TEST_CASE("twist eigenvalues") {
  const auto desc = e6_descriptor(true);
  const auto chars = linear_characters(desc, true);
  for (std::size_t r = 0; r < 6; ++r) {
    CAPTURE(r);
    CHECK(twist_eigenvalue(desc, chars[r]) == (r % 2 == 0 ? th(1) : th(2)));
    const ClassFunction chi = characteristic_function(desc, chars[r]);
    const auto t = class_table(desc);
    for (std::size_t c = 0; c < 9; ++c) {
      CHECK(chi.at(twist(desc, (*t)[c].label)) == chi[c] * twist_eigenvalue(desc, chars[r]));
    }
  }
  const auto d4 = d4_descriptor();
  const auto d4chars = linear_characters(d4, true);
  REQUIRE(d4chars.size() == 1);
  CHECK(twist_eigenvalue(d4, d4chars[0]) == CycQ(-1));
}

TEST_CASE("gamma action") {
  const auto desc = e6_descriptor(true);
  const auto images = gamma_action(desc);
  const std::vector<std::string> expected{"C_1",      "C_g0",       "C_g0^2",   "C_a^2", "C_g0*a^2",
                                          "C_g0^2*a^2", "C_a",      "C_g0*a",   "C_g0^2*a"};
  CHECK(images == expected);
  const auto t = class_table(desc);
  for (std::size_t c = 0; c < 9; ++c) CHECK(images[t->index_of(images[c])] == (*t)[c].label);
  const auto full = e6_full_support_rows();
  const ClassFunction& chi1 = full.rows[1];
  for (std::size_t c = 0; c < 9; ++c) CHECK(chi1.at(images[c]) == chi1[c]);
  CHECK_THROWS_AS(gamma_action(e6_descriptor(false)), DomainError);
  CHECK_THROWS_AS(gamma_action(d4_descriptor()), DomainError);
}

TEST_CASE("three-class table") {
  const BasisTable t = prop53_table();
  REQUIRE(t.rows.size() == 2);
  for (int k = 1; k <= 2; ++k) {
    for (int i = 0; i < 3; ++i) CHECK(t.rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)] == chi_value(k, i));
  }
  const BasisTable small = e6_basis_table(false);
  CHECK(small.row_names == std::vector<std::string>{"chi_0", "chi_1", "chi_2"});
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) CHECK(small.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] == chi_value(k, i));
  }
}

TEST_CASE("nine-class basis by both routes") {
  const BasisTable avg = e6_basis_table(true);
  const BasisTable direct = e6_basis_table_direct(true);
  REQUIRE(avg.rows.size() == 9);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const std::size_t r = static_cast<std::size_t>(3 * j + k);
      CHECK(avg.row_names[r] == "chi_" + std::to_string(k) + "^(s_" + std::to_string(j) + ")");
      for (int jj = 0; jj < 3; ++jj) {
        for (int i = 0; i < 3; ++i) {
          const std::size_t c = static_cast<std::size_t>(3 * jj + i);
          CHECK(avg.rows[r][c] == (jj == j ? chi_value(k, i) : PolQ()));
        }
      }
      CHECK(avg.rows[r] == direct.rows[r]);
    }
  }
  // Rows are pairwise orthogonal.
  for (std::size_t r = 0; r < 9; ++r) {
    for (std::size_t s = r + 1; s < 9; ++s) CHECK(inner_product(avg.rows[r], avg.rows[s]).is_zero());
  }
  const auto cc = e6_coset_characters();
  REQUIRE(cc.lambdas.size() == 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(cc.at_tag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == th(i * j));
  }
}

TEST_CASE("D4 regular unipotent class") {
  for (bool twisted : {false, true}) {
    const BasisTable t = d4_table(twisted);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.row_names[1] == (twisted ? "f0'" : "chi_A0"));
    CHECK(t.rows[1].values() == std::vector<PolQ>{PolQ::monomial(1, 2), PolQ::monomial(-1, 2)});
    CHECK(inner_product(t.rows[1], t.rows[1]) == RatQ(1));
    CHECK(inner_product(t.rows[0], t.rows[1]).is_zero());
    CHECK((*t.table)[0].centralizer == PolQ::monomial(2, 4));
  }
}

TEST_CASE("E6 scenarios") {
  for (long q : {2L, 4L, 5L, 7L, 8L, 11L, 13L}) {
    for (bool twisted : {false, true}) {
      CAPTURE(q);
      CAPTURE(twisted);
      const E6Scenario s = e6_scenario(q, twisted);
      const bool trivial = twisted ? (q + 1) % 3 == 0 : (q - 1) % 3 == 0;
      CHECK(s.k_action_trivial == trivial);
      CHECK(s.class_count == (trivial ? 9 : 3));
      CHECK(s.f_invariant_cuspidal == (trivial ? 6 : 2));
      CHECK(s.unipotent_characters == 30);
      CHECK(s.table.rows.size() == static_cast<std::size_t>(s.class_count));
    }
  }
  CHECK_THROWS_AS(e6_scenario(9, false), DomainError);
  CHECK_THROWS_AS(e6_scenario(6, false), DomainError);
  CHECK_THROWS_AS(e6_scenario(1, true), DomainError);
}

TEST_CASE("Frobenius candidates fixing g0bar") {
  const auto cands = frobenius_candidates();
  // F = [[1, b], [0, d]] with three fixed points: d = 2 (any b) or d = 1, b != 0.
  std::set<std::vector<std::vector<int>>> expected;
  for (int b = 0; b < 3; ++b) expected.insert({{1, b}, {0, 2}});
  for (int b = 1; b < 3; ++b) expected.insert({{1, b}, {0, 1}});
  std::set<std::vector<std::vector<int>>> got;
  for (const auto& c : cands) {
    got.insert(c.matrix);
    const auto cls = brute_classes(c.matrix);
    const bool distinct = cls[0] != cls[1] && cls[1] != cls[2] && cls[0] != cls[2];
    CHECK(c.g0_powers_distinct == distinct);
    CHECK(c.isomorphic_to_reference == distinct);
    CHECK(distinct == (c.matrix[1][1] == 2));
  }
  CHECK(got == expected);
}
