#include <doctest.h>

#include <map>

#include "chartab/bruhat.hpp"
#include "chartab/error.hpp"

using namespace chartab;

namespace {

PolQ P(const char* s) { return PolQ::parse(s); }
const PolQ q = PolQ::q();

struct Term {
  const char* label;
  const char* hecke;
  const char* unif;
  int a1;  // in halves
  int a2;
};

// Hand-assembled data of the counting identity: the quoted Hecke values, the
// quoted uniform parts and the signed memberships in the displayed f1, f2.
std::vector<Term> terms(UnipCase c, ClassTag tag) {
  if (c == UnipCase::D5Split && tag == ClassTag::C82) {
    return {{"5.", "q^5", "1", 0, 0}, {"1.31", "q^3", "0", 1, 0}, {".32", "-q^3", "0", -1, 0}, {"11.3", "0", "0", -1, 0}};
  }
  if (c == UnipCase::D5Split) {
    return {{"5.", "q^4", "1", 0, 0},         {".41", "q^4", "q^2", 0, 0},      {"1.4", "q^4 - q^3", "q", 0, 0},
            {"1.31", "-q^3 + q^2", "0", 1, 0}, {"11.3", "-q^3", "0", -1, 0},     {".32", "-q^2", "0", -1, 0},
            {"1.211", "q^2 - q", "0", 0, 1},   {"111.2", "-q", "0", 0, -1},      {".221", "-q^2", "0", 0, -1}};
  }
  if (tag == ClassTag::C82) {
    return {{"4.", "q^5", "1", 0, 0}, {"211.", "q^3", "0", 1, 0}, {".4", "-q^3", "0", -1, 0},
            {"2.2", "0", "0", 1, 0},  {"21.1", "0", "0", -1, 0}};
  }
  return {{"4.", "q^4", "1", 0, 0},         {"31.", "q^4 - q^3", "q", 0, 0}, {"3.1", "q^4", "q^2", 0, 0},
          {"2.2", "0", "0", 1, 0},          {".4", "-q^2", "0", -1, 0},      {"21.1", "-q^3", "0", -1, 0},
          {"211.", "-q^3 + q^2", "0", 1, 0}, {"1.21", "q", "0", 0, 1},       {".31", "-q^2 + q", "0", 0, -1},
          {"11.11", "0", "0", 0, -1},       {"1111.", "q^2", "0", 0, 1}};
}

// f1(u), f2(u) from the displayed expansion with Y = gamma * y0.
std::pair<PolQ, PolQ> f_values(ClassTag tag, const CycQ& y) {
  if (tag == ClassTag::C82) return {PolQ::monomial(y, 2), PolQ()};
  return {PolQ::monomial(y, 3), PolQ::monomial(y, 4)};
}

PolQ oracle_rhs(UnipCase c, ClassTag tag, const CycQ& gamma, int y0) {
  const auto [f1, f2] = f_values(tag, gamma * CycQ(y0));
  PolQ sum;
  for (const auto& t : terms(c, tag)) {
    const PolQ part = P(t.unif) + f1 * CycQ(Rational(t.a1) / 2) + f2 * CycQ(Rational(t.a2) / 2);
    sum += P(t.hecke) * part;
  }
  return sum;
}

HeckeSpec spec_of(UnipCase c) { return HeckeSpec::parse(c == UnipCase::D5Split ? "D5" : "2D5"); }

// D labels are unordered; compare after normalizing.
const PhiRecord* find(const StarInstance& inst, const char* label) {
  const Bipartition want = spec_of(inst.which).check_label(Bipartition::parse(label));
  for (const auto& r : inst.records) {
    if (r.label == want) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("class tags and words") {
  CHECK(class_tag_name(ClassTag::C82) == "82");
  CHECK(parse_class_tag("6211") == ClassTag::C6211);
  CHECK_THROWS_AS(parse_class_tag("71"), ParseError);
  CHECK(star_word(ClassTag::C82) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(star_word(ClassTag::C6211) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("X/Y expansion") {
  SignState plus;
  plus.gamma_82 = 1;
  plus.gamma_6211 = 1;
  CHECK(xy_expand(ClassTag::C82, plus, 1) == std::pair{P("q^2"), PolQ()});
  CHECK(xy_expand(ClassTag::C6211, plus, 1) == std::pair{P("q^3"), P("q^4")});
  CHECK(xy_expand(ClassTag::C6211, plus, -1) == std::pair{P("-q^3"), P("-q^4")});
  CHECK_THROWS_AS(xy_expand(ClassTag::C82, SignState{}, 1), DomainError);
  CHECK(xy_expand_with(ClassTag::C82, CycQ::theta(), -1).first == PolQ::monomial(-CycQ::theta(), 2));
}

TEST_CASE("instances carry the quoted data") {
  for (UnipCase c : {UnipCase::D5Split, UnipCase::D5Twisted}) {
    for (ClassTag tag : {ClassTag::C82, ClassTag::C6211}) {
      CAPTURE(unip_case_name(c));
      CAPTURE(class_tag_name(tag));
      const StarInstance inst = make_instance(c, tag);
      CHECK(inst.word == star_word(tag));
      CHECK(inst.records.size() == (c == UnipCase::D5Split ? 18U : 20U));
      for (const auto& t : terms(c, tag)) {
        CAPTURE(t.label);
        const PhiRecord* r = find(inst, t.label);
        REQUIRE(r != nullptr);
        CHECK(r->hecke == P(t.hecke));
        CHECK(r->f_unif == P(t.unif));
        CHECK(r->a1 == Rational(t.a1) / 2);
        CHECK(r->a2 == Rational(t.a2) / 2);
      }
      // Every record outside the quoted ones contributes nothing; f2 vanishes
      // on the class 82.
      std::map<std::string, bool> quoted;
      for (const auto& t : terms(c, tag)) {
        quoted[spec_of(c).check_label(Bipartition::parse(t.label)).str()] = true;
      }
      for (const auto& r : inst.records) {
        if (quoted.count(r.label.str())) continue;
        CAPTURE(r.label.str());
        const bool f2_seen = tag == ClassTag::C6211 && r.a2 != 0;
        const bool silent = r.hecke.is_zero() || (r.f_unif.is_zero() && r.a1 == 0 && !f2_seen);
        CHECK(silent);
      }
    }
  }
  CHECK_THROWS_AS(f_unif_values(UnipCase::D4Split, ClassTag::C82), DomainError);
}

TEST_CASE("right-hand side of the counting identity") {
  const std::vector<CycQ> roots{CycQ::root_of_unity(0), CycQ::root_of_unity(1), CycQ::root_of_unity(2),
                                -CycQ::root_of_unity(0), -CycQ::root_of_unity(1), -CycQ::root_of_unity(2)};
  for (UnipCase c : {UnipCase::D5Split, UnipCase::D5Twisted}) {
    for (ClassTag tag : {ClassTag::C82, ClassTag::C6211}) {
      CAPTURE(unip_case_name(c));
      CAPTURE(class_tag_name(tag));
      const StarInstance inst = make_instance(c, tag);
      const PolQ unif = uniform_part(inst);
      CHECK(unif == (tag == ClassTag::C82 ? P("q^5") : P("q^6 + q^5")));
      for (const CycQ& g : roots) {
        for (int y0 : {1, -1}) {
          const PolQ rhs = rhs_star_with(inst, g, y0);
          CHECK(rhs == oracle_rhs(c, tag, g, y0));
          CHECK(rhs == unif * (PolQ(1) + PolQ(g * CycQ(y0))));
        }
        CHECK(rhs_star_with(inst, g, 1) + rhs_star_with(inst, g, -1) == unif * CycQ(2));
      }
      SignState plus;
      plus.gamma_82 = 1;
      plus.gamma_6211 = 1;
      CHECK(rhs_star(inst, plus, 1) == unif * CycQ(2));
      CHECK(rhs_star(inst, plus, -1).is_zero());
      const CycQ at2 = rhs_star(inst, plus, 1).eval(2);
      CHECK(at2.is_rational());
      CHECK(at2.a() >= 0);
    }
  }
}

TEST_CASE("sign solving and the final table") {
  for (UnipCase c : {UnipCase::D5Split, UnipCase::D5Twisted}) {
    CAPTURE(unip_case_name(c));
    const SignSolution sol = solve_signs({make_instance(c, ClassTag::C82), make_instance(c, ClassTag::C6211)});
    CHECK(sol.signs.gamma_82 == 1);
    CHECK(sol.signs.gamma_6211 == 1);
    REQUIRE(sol.tags.size() == 2);
    for (const auto& t : sol.tags) {
      CHECK(t.admissible == std::vector<CycQ>{CycQ(1), CycQ(-1)});
      CHECK(t.gamma == 1);
      CHECK(t.rhs_minus.is_zero());
    }
    CHECK(sol.tags[0].rhs_plus == P("2*q^5"));
    CHECK(sol.tags[1].rhs_plus == P("2*q^6 + 2*q^5"));
    CHECK(sol.table.row_names == std::vector<std::string>{"f1", "f2"});
    CHECK(sol.table.column_names ==
          std::vector<std::string>{"u_(82)", "u_(82)'", "u_(6211)", "u_(6211)'", "other"});
    CHECK(sol.table.values[0] == std::vector<PolQ>{P("q^2"), P("-q^2"), P("q^3"), P("-q^3"), PolQ()});
    CHECK(sol.table.values[1] == std::vector<PolQ>{PolQ(), PolQ(), P("q^4"), P("-q^4"), PolQ()});
  }
}

TEST_CASE("tampered instances are rejected") {
  StarInstance inst = make_instance(UnipCase::D5Split, ClassTag::C82);
  for (auto& r : inst.records) {
    if (r.label == spec_of(UnipCase::D5Split).check_label(Bipartition::parse("1.31"))) r.a1 = -r.a1;
  }
  CHECK_THROWS_AS(solve_signs({inst, make_instance(UnipCase::D5Split, ClassTag::C6211)}), Inconsistent);
  CHECK_THROWS_AS(solve_signs({make_instance(UnipCase::D5Split, ClassTag::C82)}), DomainError);
  CHECK_THROWS_AS(
      solve_signs({make_instance(UnipCase::D5Split, ClassTag::C82), make_instance(UnipCase::D5Twisted, ClassTag::C6211)}),
      DomainError);
}
