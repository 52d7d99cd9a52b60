#include <algorithm>

#include "chartab/error.hpp"
#include "chartab/hecke.hpp"

namespace chartab {

HeckeSpec HeckeSpec::type_b(int rank, PolQ Q) {
  if (rank < 1 || rank > kMaxRank) throw DomainError("unsupported rank for type B: " + std::to_string(rank));
  if (Q.is_zero()) throw DomainError("the parameter Q must be nonzero");
  HeckeSpec s;
  s.kind = Kind::B;
  s.rank = rank;
  s.Q = std::move(Q);
  return s;
}

HeckeSpec HeckeSpec::type_d(int rank) {
  if (rank < 2 || rank > kMaxRank) throw DomainError("unsupported rank for type D: " + std::to_string(rank));
  HeckeSpec s;
  s.kind = Kind::D;
  s.rank = rank;
  s.Q = PolQ(1);
  return s;
}

HeckeSpec HeckeSpec::twisted_d(int rank) {
  if (rank < 3 || rank > kMaxRank + 1) throw DomainError("unsupported rank for type 2D: " + std::to_string(rank));
  HeckeSpec s;
  s.kind = Kind::TwistedD;
  s.rank = rank;
  s.Q = pow(PolQ::q(), 2);
  return s;
}

HeckeSpec HeckeSpec::parse(const std::string& type, const std::string& Q) {
  const CoxeterDatum d = CoxeterDatum::parse(type);
  if (d.family == Family::B) return type_b(d.rank, Q.empty() ? PolQ::q() : PolQ::parse(Q));
  if (!Q.empty()) throw DomainError("--Q applies to type B only");
  return d.twisted() ? twisted_d(d.rank) : type_d(d.rank);
}

std::string HeckeSpec::name() const {
  switch (kind) {
    case Kind::B:
      return "B" + std::to_string(rank) + "(Q=" + Q.str() + ")";
    case Kind::D:
      return "D" + std::to_string(rank);
    case Kind::TwistedD:
      return "2D" + std::to_string(rank);
  }
  return "?";
}

int HeckeSpec::b_rank() const { return kind == Kind::TwistedD ? rank - 1 : rank; }

std::vector<int> HeckeSpec::to_b_word(const std::vector<int>& word) const {
  std::vector<int> out;
  auto bad = [&](int s) {
    return DomainError("invalid generator label " + std::to_string(s) + " for " + name());
  };
  switch (kind) {
    case Kind::B:
      for (int s : word) {
        if (s < 1 || s > rank) throw bad(s);
        out.push_back(s);
      }
      break;
    case Kind::D:
      for (int s : word) {
        if (s < 1 || s > rank) throw bad(s);
        if (s == 1) {
          out.push_back(2);
        } else if (s == 2) {
          out.insert(out.end(), {1, 2, 1});
        } else {
          out.push_back(s);
        }
      }
      break;
    case Kind::TwistedD:
      for (std::size_t i = 0; i < word.size(); ++i) {
        const int s = word[i];
        if (s < 1 || s > rank) throw bad(s);
        if (s == 1 || s == 2) {
          // The F-orbit {s1, s2} acts as one generator of W^F; it must be
          // written as the adjacent pair s1 s2 (or s2 s1).
          if (i + 1 >= word.size() || word[i + 1] != 3 - s) {
            throw DomainError("in " + name() + " the generators 1 and 2 must appear as an adjacent pair");
          }
          out.push_back(1);
          ++i;
        } else {
          out.push_back(s - 1);
        }
      }
      break;
  }
  return out;
}

Bipartition HeckeSpec::check_label(const Bipartition& label) const {
  const int n = b_rank();
  if (label.size() != n) {
    throw DomainError("label " + label.str() + " has size " + std::to_string(label.size()) + ", expected " +
                      std::to_string(n) + " for " + name());
  }
  if (kind != Kind::D) return label;
  if (label.lambda == label.mu) {
    throw DomainError("degenerate label " + label.str() + " (λ = μ) is not supported for " + name());
  }
  const auto labels = d_labels(rank);
  if (std::find(labels.begin(), labels.end(), label) != labels.end()) return label;
  return Bipartition{label.mu, label.lambda};
}

std::vector<Bipartition> HeckeSpec::labels() const {
  return kind == Kind::D ? d_labels(rank) : bipartitions(b_rank());
}

}  // namespace chartab
