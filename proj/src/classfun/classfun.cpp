#include "chartab/classfun.hpp"

#include <set>

#include "chartab/error.hpp"

namespace chartab {

ClassTable::ClassTable(std::vector<ClassRecord> classes) : classes_(std::move(classes)) {
  std::set<std::string> seen;
  for (const auto& c : classes_) {
    if (c.centralizer.is_zero()) throw DomainError("class " + c.label + " has a zero centralizer order");
    if (!seen.insert(c.label).second) throw DomainError("duplicate class label " + c.label);
  }
}

std::size_t ClassTable::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].label == label) return i;
  }
  throw DomainError("unknown class label " + label);
}

bool operator==(const ClassTable& a, const ClassTable& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a[i];
    const auto& y = b[i];
    if (x.label != y.label || x.centralizer != y.centralizer || x.coset != y.coset || x.ss_part != y.ss_part) {
      return false;
    }
  }
  return true;
}

TablePtr make_table(std::vector<ClassRecord> classes) {
  return std::make_shared<const ClassTable>(std::move(classes));
}

namespace {

void require_same(const ClassFunction& a, const ClassFunction& b) {
  if (a.table() != b.table() && !(*a.table() == *b.table())) {
    throw DomainError("class functions live on different class tables");
  }
}

}  // namespace

ClassFunction::ClassFunction(TablePtr table, std::vector<PolQ> values)
    : table_(std::move(table)), values_(std::move(values)) {
  if (!table_) throw DomainError("class function without a table");
  if (values_.size() != table_->size()) {
    throw DomainError("class function has " + std::to_string(values_.size()) + " values for " +
                      std::to_string(table_->size()) + " classes");
  }
}

ClassFunction::ClassFunction(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw DomainError("class function without a table");
  values_.assign(table_->size(), PolQ());
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction out = *this;
  for (auto& v : out.values_) v = v.conj();
  return out;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const PolQ& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return (a.table_ == b.table_ || *a.table_ == *b.table_) && a.values_ == b.values_;
}

RatQ inner_product(const ClassFunction& f, const ClassFunction& g) {
  require_same(f, g);
  RatQ total;
  const auto& t = *f.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (f[i].is_zero() || g[i].is_zero()) continue;
    total += RatQ(f[i] * g[i].conj(), t[i].centralizer);
  }
  return total;
}

ClassFunction indicator(const TablePtr& table, const std::vector<std::string>& labels) {
  std::vector<PolQ> v(table->size());
  for (const auto& l : labels) v[table->index_of(l)] = PolQ(1);
  return ClassFunction(table, std::move(v));
}

ClassFunction constant(const TablePtr& table, const PolQ& value) {
  return ClassFunction(table, std::vector<PolQ>(table->size(), value));
}

ClassFunction ss_indicator(const TablePtr& table, const std::string& tag) {
  std::vector<PolQ> v(table->size());
  for (std::size_t i = 0; i < table->size(); ++i) {
    if ((*table)[i].ss_part == tag) v[i] = PolQ(1);
  }
  return ClassFunction(table, std::move(v));
}

ClassFunction pointwise_mul(const ClassFunction& a, const ClassFunction& b) {
  require_same(a, b);
  std::vector<PolQ> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] * b[i];
  return ClassFunction(a.table(), std::move(v));
}

ClassFunction coset_average(const ClassFunction& f, const std::string& s, const std::vector<ClassFunction>& lambdas,
                            const std::vector<CycQ>& lambda_at_s) {
  if (lambdas.empty()) throw DomainError("coset_average needs at least one linear character");
  if (lambdas.size() != lambda_at_s.size()) throw DomainError("one value λ(s) is needed per linear character");
  const auto& t = *f.table();
  for (const auto& lam : lambdas) {
    require_same(f, lam);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (t[i].coset == t[j].coset && lam[i] != lam[j]) {
          throw DomainError("linear character is not constant on coset " + t[i].coset);
        }
      }
    }
  }
  ClassFunction acc(f.table());
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    acc += pointwise_mul(lambdas[k], f) * PolQ(lambda_at_s[k].inverse());
  }
  acc *= PolQ(CycQ(Rational(1, static_cast<long>(lambdas.size()))));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const PolQ expected = t[i].ss_part == s ? f[i] : PolQ();
    if (acc[i] != expected) {
      throw Inconsistent("f^(" + s + ") at " + t[i].label + " is " + acc[i].str() + ", expected " + expected.str());
    }
  }
  return acc;
}

std::vector<RatQ> express_in_span(const ClassFunction& f, const std::vector<ClassFunction>& basis) {
  const std::size_t n = basis.size();
  if (n == 0) {
    if (f.is_zero()) return {};
    throw NotInSpan("nonzero function and empty basis");
  }
  // Augmented system M c = r with M_ij = <b_j, b_i>, r_i = <f, b_i>.
  std::vector<std::vector<RatQ>> m(n, std::vector<RatQ>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = inner_product(basis[j], basis[i]);
    m[i][n] = inner_product(f, basis[i]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw SingularGram("Gram matrix of the basis is singular");
    std::swap(m[pivot], m[col]);
    const RatQ inv = m[col][col].inverse();
    for (std::size_t j = col; j <= n; ++j) {
      if (!m[col][j].is_zero()) m[col][j] *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      const RatQ factor = m[i][col];
      for (std::size_t j = col; j <= n; ++j) {
        if (!m[col][j].is_zero()) m[i][j] -= factor * m[col][j];
      }
    }
  }
  std::vector<RatQ> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = m[i][n];

  const auto& t = *f.table();
  for (std::size_t k = 0; k < t.size(); ++k) {
    RatQ value(f[k]);
    for (std::size_t j = 0; j < n; ++j) {
      require_same(f, basis[j]);
      if (!basis[j][k].is_zero() && !c[j].is_zero()) value -= c[j] * RatQ(basis[j][k]);
    }
    if (!value.is_zero()) throw NotInSpan("residual " + value.str() + " at class " + t[k].label);
  }
  return c;
}

nlohmann::json table_to_json(const ClassTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : t.classes()) {
    classes.push_back({{"label", c.label}, {"centralizer", c.centralizer.str()}, {"coset", c.coset}, {"ss_part", c.ss_part}});
  }
  return classes;
}

nlohmann::json to_json(const ClassFunction& f) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : f.values()) values.push_back(v.str());
  return {{"classes", table_to_json(*f.table())}, {"values", values}};
}

ClassFunction function_from_json(const nlohmann::json& j) {
  try {
    std::vector<ClassRecord> recs;
    for (const auto& c : j.at("classes")) {
      recs.push_back(ClassRecord{c.at("label").get<std::string>(), PolQ::parse(c.at("centralizer").get<std::string>()),
                                 c.value("coset", ""), c.value("ss_part", "")});
    }
    std::vector<PolQ> values;
    for (const auto& v : j.at("values")) values.push_back(PolQ::parse(v.get<std::string>()));
    return ClassFunction(make_table(std::move(recs)), std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed class function JSON: ") + e.what());
  }
}

}  // namespace chartab
