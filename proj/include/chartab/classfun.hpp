#pragma once

// Class functions on a finite set of labelled conjugacy classes whose
// centralizer orders are polynomials in q.

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartab/exactnum.hpp"

namespace chartab {

struct ClassRecord {
  std::string label;
  PolQ centralizer;
  /// Optional tags; empty when not applicable.
  std::string coset;
  std::string ss_part;
};

class ClassTable {
 public:
  explicit ClassTable(std::vector<ClassRecord> classes);

  std::size_t size() const { return classes_.size(); }
  const ClassRecord& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<ClassRecord>& classes() const { return classes_; }
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const ClassTable& a, const ClassTable& b);

 private:
  std::vector<ClassRecord> classes_;
};

using TablePtr = std::shared_ptr<const ClassTable>;

TablePtr make_table(std::vector<ClassRecord> classes);

class ClassFunction {
 public:
  ClassFunction(TablePtr table, std::vector<PolQ> values);
  /// The zero function.
  explicit ClassFunction(TablePtr table);

  const TablePtr& table() const { return table_; }
  std::size_t size() const { return values_.size(); }
  const PolQ& operator[](std::size_t i) const { return values_[i]; }
  const PolQ& at(const std::string& label) const { return values_[table_->index_of(label)]; }
  const std::vector<PolQ>& values() const { return values_; }
  bool is_zero() const;

  ClassFunction conj() const;
  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const PolQ& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const PolQ& c) { return a *= c; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

 private:
  TablePtr table_;
  std::vector<PolQ> values_;
};

/// Σ_C f(C) conj(g(C)) / |C_G(g_C)|. Throws DomainError for different tables.
RatQ inner_product(const ClassFunction& f, const ClassFunction& g);

/// 1 on the listed classes, 0 elsewhere. Throws DomainError on an unknown label.
ClassFunction indicator(const TablePtr& table, const std::vector<std::string>& labels);
ClassFunction constant(const TablePtr& table, const PolQ& value);
/// Indicator of every class whose ss_part tag equals tag.
ClassFunction ss_indicator(const TablePtr& table, const std::string& tag);

ClassFunction pointwise_mul(const ClassFunction& a, const ClassFunction& b);

/// f^(s) = d^{-1} Σ_λ λ(s)^{-1} λ·f. Each λ must be constant on coset tags
/// (DomainError otherwise). The result is checked to agree with f on the
/// classes whose ss_part tag is s and to vanish elsewhere; a failed check
/// raises Inconsistent.
ClassFunction coset_average(const ClassFunction& f, const std::string& s,
                            const std::vector<ClassFunction>& lambdas, const std::vector<CycQ>& lambda_at_s);

/// Coefficients c with f = Σ c_j basis_j, by an exact Gram solve. Throws
/// SingularGram or NotInSpan.
std::vector<RatQ> express_in_span(const ClassFunction& f, const std::vector<ClassFunction>& basis);

/// {classes:[{label, centralizer, coset, ss_part}], values:[...]}
nlohmann::json to_json(const ClassFunction& f);
nlohmann::json table_to_json(const ClassTable& t);
ClassFunction function_from_json(const nlohmann::json& j);

}  // namespace chartab
