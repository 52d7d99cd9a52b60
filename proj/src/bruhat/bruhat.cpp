#include "chartab/bruhat.hpp"

#include "chartab/error.hpp"

namespace chartab {

namespace {

void require_d5(UnipCase c) {
  if (c != UnipCase::D5Split && c != UnipCase::D5Twisted) {
    throw DomainError("the counting identity is set up for D5-split and D5-twisted only, not " + unip_case_name(c));
  }
}

HeckeSpec hecke_spec(UnipCase c) {
  return c == UnipCase::D5Split ? HeckeSpec::type_d(5) : HeckeSpec::twisted_d(5);
}

CycQ sixth_root(int k) {
  CycQ v = CycQ::root_of_unity(2L * k);
  return k % 2 == 0 ? v : -v;
}

}  // namespace

std::string class_tag_name(ClassTag tag) { return tag == ClassTag::C82 ? "82" : "6211"; }

ClassTag parse_class_tag(const std::string& text) {
  if (text == "82") return ClassTag::C82;
  if (text == "6211") return ClassTag::C6211;
  throw ParseError("unknown class tag '" + text + "' (expected 82 or 6211)");
}

std::vector<int> star_word(ClassTag tag) {
  return tag == ClassTag::C82 ? std::vector<int>{1, 2, 3, 4, 5} : std::vector<int>{1, 2, 3, 4};
}

std::vector<std::pair<Bipartition, PolQ>> f_unif_values(UnipCase c, ClassTag tag) {
  require_d5(c);
  const HeckeSpec spec = hecke_spec(c);
  const PolQ q = PolQ::q();
  std::vector<std::pair<std::string, PolQ>> raw;
  if (c == UnipCase::D5Split) {
    raw = tag == ClassTag::C82 ? decltype(raw){{"5.", 1}} : decltype(raw){{"5.", 1}, {"1.4", q}, {".41", q * q}};
  } else {
    raw = tag == ClassTag::C82 ? decltype(raw){{"4.", 1}} : decltype(raw){{"4.", 1}, {"31.", q}, {"3.1", q * q}};
  }
  std::vector<std::pair<Bipartition, PolQ>> out;
  for (const auto& [label, value] : raw) out.emplace_back(spec.check_label(Bipartition::parse(label)), value);
  return out;
}

StarInstance make_instance(UnipCase c, ClassTag tag) {
  require_d5(c);
  const HeckeSpec spec = hecke_spec(c);
  const auto unif = f_unif_values(c, tag);
  const auto fs = f_basis(c);
  StarInstance inst{c, tag, star_word(tag), {}};
  for (const auto& label : spec.labels()) {
    PhiRecord r;
    r.label = label;
    r.hecke = char_value(spec, label, inst.word);
    for (const auto& [l, v] : unif) {
      if (l == label) r.f_unif = v;
    }
    const Symbol sym = bipartition_to_symbol(label, c);
    r.a1 = fs[0].coefficient(sym);
    r.a2 = fs[1].coefficient(sym);
    inst.records.push_back(std::move(r));
  }
  return inst;
}

std::pair<PolQ, PolQ> xy_expand_with(ClassTag tag, const CycQ& gamma, int y0) {
  if (y0 != 1 && y0 != -1) throw DomainError("Y0 takes the values +1 and -1 only");
  const PolQ y = PolQ(gamma * CycQ(y0));
  if (tag == ClassTag::C82) return {PolQ::monomial(1, 2) * y, PolQ()};
  return {PolQ::monomial(1, 3) * y, PolQ::monomial(1, 4) * y};
}

std::pair<PolQ, PolQ> xy_expand(ClassTag tag, const SignState& signs, int y0) {
  const auto& g = tag == ClassTag::C82 ? signs.gamma_82 : signs.gamma_6211;
  if (!g) throw DomainError("the sign for class " + class_tag_name(tag) + " has not been determined");
  return xy_expand_with(tag, CycQ(*g), y0);
}

PolQ uniform_part(const StarInstance& inst) {
  PolQ total;
  for (const auto& r : inst.records) total += r.hecke * r.f_unif;
  return total;
}

PolQ rhs_star_with(const StarInstance& inst, const CycQ& gamma, int y0) {
  const auto [f1, f2] = xy_expand_with(inst.tag, gamma, y0);
  PolQ total;
  for (const auto& r : inst.records) {
    total += r.hecke * (r.f_unif + f1 * CycQ(r.a1) + f2 * CycQ(r.a2));
  }
  return total;
}

PolQ rhs_star(const StarInstance& inst, const SignState& signs, int y0) {
  const auto& g = inst.tag == ClassTag::C82 ? signs.gamma_82 : signs.gamma_6211;
  if (!g) throw DomainError("the sign for class " + class_tag_name(inst.tag) + " has not been determined");
  return rhs_star_with(inst, CycQ(*g), y0);
}

SignSolution solve_signs(const std::vector<StarInstance>& instances) {
  if (instances.empty()) throw DomainError("solve_signs needs instances for the tags 82 and 6211");
  SignSolution sol;
  sol.which = instances.front().which;
  const StarInstance* by_tag[2] = {nullptr, nullptr};
  for (const auto& inst : instances) {
    if (inst.which != sol.which) throw DomainError("instances belong to different cases");
    const auto*& slot = by_tag[inst.tag == ClassTag::C82 ? 0 : 1];
    if (slot) throw DomainError("two instances for class " + class_tag_name(inst.tag));
    slot = &inst;
  }
  if (!by_tag[0] || !by_tag[1]) throw DomainError("solve_signs needs instances for both tags 82 and 6211");

  for (const StarInstance* inst : by_tag) {
    TagSolution ts;
    ts.tag = inst->tag;
    ts.word = inst->word;
    for (int k = 0; k < 6; ++k) {
      const CycQ gamma = sixth_root(k);
      if (rhs_star_with(*inst, gamma, 1).is_real() && rhs_star_with(*inst, gamma, -1).is_real()) {
        ts.admissible.push_back(gamma);
      }
    }
    if (ts.admissible.size() != 2 || ts.admissible[0] != CycQ(1) || ts.admissible[1] != CycQ(-1)) {
      std::string found;
      for (const auto& g : ts.admissible) found += (found.empty() ? "" : ", ") + g.str();
      throw Inconsistent("realness of the right-hand side for class " + class_tag_name(ts.tag) +
                         " does not force gamma = +-1 (admissible: {" + found + "})");
    }
    ts.gamma = 1;
    ts.uniform = uniform_part(*inst);
    ts.rhs_plus = rhs_star_with(*inst, CycQ(1), 1);
    ts.rhs_minus = rhs_star_with(*inst, CycQ(1), -1);
    const PolQ non_uniform = ts.rhs_plus - ts.uniform;
    if (non_uniform != ts.uniform) {
      throw Inconsistent("class " + class_tag_name(ts.tag) + ": the f-part " + non_uniform.str() +
                         " does not equal the uniform part " + ts.uniform.str() +
                         ", so the sum does not factor as (uniform)(1 + gamma Y0)");
    }
    ts.representative = ts.tag == ClassTag::C82 ? "u1(1)u2(1)u3(1)u4(1)u5(1)" : "u1(1)u2(1)u3(1)u4(1)";
    ts.criterion = "the class with gamma = +1 is the one meeting B^F w B^F for w = " + word_str(ts.word);
    (ts.tag == ClassTag::C82 ? sol.signs.gamma_82 : sol.signs.gamma_6211) = ts.gamma;
    sol.tags.push_back(std::move(ts));
  }

  Table4& t = sol.table;
  t.row_names = {"f1", "f2"};
  t.column_names = {"u_(82)", "u_(82)'", "u_(6211)", "u_(6211)'", "other"};
  t.values.assign(2, {});
  for (ClassTag tag : {ClassTag::C82, ClassTag::C6211}) {
    for (int y0 : {1, -1}) {
      const auto [f1, f2] = xy_expand(tag, sol.signs, y0);
      t.values[0].push_back(f1);
      t.values[1].push_back(f2);
    }
  }
  t.values[0].emplace_back();
  t.values[1].emplace_back();
  return sol;
}

}  // namespace chartab
