#include <map>
#include <mutex>

#include "chartab/error.hpp"
#include "chartab/hecke.hpp"

namespace chartab {

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatQ(1);
  return m;
}

RatQ RatMatrix::trace() const {
  RatQ t;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.n_ != y.n_) throw DomainError("matrix size mismatch");
  const int n = x.n_;
  RatMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const RatQ& a = x.at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const RatQ& b = y.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
  if (x.n_ != y.n_) throw DomainError("matrix size mismatch");
  RatMatrix out = x;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
  return out;
}

RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
  if (x.n_ != y.n_) throw DomainError("matrix size mismatch");
  RatMatrix out = x;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= y.a_[i];
  return out;
}

RatMatrix operator*(const RatQ& c, const RatMatrix& x) {
  RatMatrix out = x;
  for (auto& e : out.a_) {
    if (!e.is_zero()) e *= c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Standard bitableaux

std::vector<Bitableau> standard_bitableaux(const Bipartition& bp) {
  const Partition* shape[2] = {&bp.lambda, &bp.mu};
  std::vector<int> filled[2] = {std::vector<int>(bp.lambda.size(), 0), std::vector<int>(bp.mu.size(), 0)};
  const int n = bp.size();
  std::vector<Bitableau> out;
  Bitableau cur;
  // Entries are placed in increasing order into addable boxes, trying the λ
  // side first and rows top to bottom; the list order follows from this.
  auto rec = [&](auto&& self, int placed) -> void {
    if (placed == n) {
      out.push_back(cur);
      return;
    }
    for (int side = 0; side < 2; ++side) {
      const auto& sh = *shape[side];
      auto& f = filled[side];
      for (std::size_t r = 0; r < sh.size(); ++r) {
        if (f[r] >= sh[r]) continue;
        if (r > 0 && f[r - 1] <= f[r]) continue;
        cur.push_back(Box{side, static_cast<int>(r), f[r]});
        ++f[r];
        self(self, placed + 1);
        --f[r];
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Seminormal representation

namespace {

// Content of a box scaled by q^n so that it is a polynomial:
// λ side Q q^(c - r), μ side -q^(c - r).
PolQ scaled_content(const Box& b, const PolQ& Q, int n) {
  PolQ m = PolQ::monomial(1, n + b.col - b.row);
  return b.side == 0 ? Q * m : -m;
}

}  // namespace

SeminormalRep::SeminormalRep(const Bipartition& bp, const PolQ& Q)
    : label_(bp), rank_(bp.size()), basis_(standard_bitableaux(bp)) {
  const int n = rank_;
  const int d = dim();
  std::map<Bitableau, int> index;
  for (int i = 0; i < d; ++i) index.emplace(basis_[static_cast<std::size_t>(i)], i);

  const PolQ q = PolQ::q();
  const PolQ qm1 = q - PolQ(1);

  RatMatrix t(d);
  for (int i = 0; i < d; ++i) {
    t.at(i, i) = basis_[static_cast<std::size_t>(i)][0].side == 0 ? RatQ(Q) : RatQ(-1);
  }
  gens_.push_back(std::move(t));

  for (int i = 1; i < n; ++i) {
    RatMatrix m(d);
    for (int p = 0; p < d; ++p) {
      const Bitableau& P = basis_[static_cast<std::size_t>(p)];
      const Box& bi = P[static_cast<std::size_t>(i - 1)];
      const Box& bj = P[static_cast<std::size_t>(i)];
      if (bi.side == bj.side && bi.row == bj.row) {
        m.at(p, p) = RatQ(q);
        continue;
      }
      if (bi.side == bj.side && bi.col == bj.col) {
        m.at(p, p) = RatQ(-1);
        continue;
      }
      Bitableau S = P;
      std::swap(S[static_cast<std::size_t>(i - 1)], S[static_cast<std::size_t>(i)]);
      auto it = index.find(S);
      if (it == index.end()) throw Inconsistent("swapped tableau is not standard");
      const int s = it->second;
      if (s < p) continue;
      const PolQ a = scaled_content(bi, Q, n);
      const PolQ b = scaled_content(bj, Q, n);
      const RatQ alpha_p(qm1 * b, b - a);
      const RatQ alpha_s(qm1 * a, a - b);
      m.at(p, p) = alpha_p;
      m.at(s, s) = alpha_s;
      m.at(s, p) = RatQ(1);
      m.at(p, s) = alpha_p * alpha_s + RatQ(q);
    }
    gens_.push_back(std::move(m));
  }
}

const RatMatrix& SeminormalRep::generator(int b_label) const {
  if (b_label < 1 || b_label > rank_) throw DomainError("invalid generator label " + std::to_string(b_label));
  return gens_[static_cast<std::size_t>(b_label - 1)];
}

RatMatrix SeminormalRep::word_matrix(const std::vector<int>& b_word) const {
  if (b_word.empty()) return RatMatrix::identity(dim());
  RatMatrix acc = generator(b_word[0]);
  for (std::size_t k = 1; k < b_word.size(); ++k) acc = acc * generator(b_word[k]);
  return acc;
}

std::shared_ptr<const SeminormalRep> representation(const HeckeSpec& spec, const Bipartition& label) {
  const Bipartition bp = spec.check_label(label);
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const SeminormalRep>> cache;
  const std::string key = std::to_string(spec.b_rank()) + "|" + spec.Q.str() + "|" + bp.str();
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rep = std::make_shared<const SeminormalRep>(bp, spec.Q);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(rep)).first->second;
}

PolQ char_value(const HeckeSpec& spec, const Bipartition& label, const std::vector<int>& word) {
  const auto b_word = spec.to_b_word(word);
  const auto rep = representation(spec, label);
  const RatQ tr = rep->word_matrix(b_word).trace();
  if (!tr.is_polynomial()) {
    throw Inconsistent("trace for " + label.str() + " at " + word_str(word) + " is not a polynomial: " + tr.str());
  }
  return tr.num();
}

}  // namespace chartab
