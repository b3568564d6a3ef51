#pragma once

#include <string>
#include <vector>

#include "qcw/quotient.hpp"
#include "qcw/spaces.hpp"

namespace qcw {

/// Partition indexing a Schubert class of Gr_k(C^n): n-k >= rows[0] >= ... >=
/// rows[k-1] >= 0.
struct YoungDiagram {
  std::vector<int> rows;
  int k = 0;
  int n = 0;

  YoungDiagram(std::vector<int> r, int k_, int n_);
  int codegree() const;
  std::string to_string() const;  // [l1,l2,...]
  static YoungDiagram parse(const std::string& text, int k, int n);
  bool operator==(const YoungDiagram& o) const { return rows == o.rows && k == o.k && n == o.n; }
};

/// All diagrams in the k x (n-k) box, sorted by codegree then lexicographic.
std::vector<YoungDiagram> enumerate_diagrams(int k, int n);

/// Universe in the special classes s_1..s_{n-k} with |s_j| = 2j.
UniversePtr schubert_universe(int k, int n);

/// Giambelli determinant det(s_{lambda_i + j - i}) as a polynomial in the
/// special classes (s_0 = 1, s_j = 0 outside 0..n-k).
Polynomial giambelli(const YoungDiagram& lambda);

/// c_j = (-1)^j x(1,...,1,0,...,0) with j ones.
struct SignedDiagram {
  int sign;
  YoungDiagram diagram;
};
SignedDiagram chern_as_schubert(int j, int k, int n);

/// Giambelli polynomial rewritten in the Chern generators c_1..c_k of the
/// Borel presentation (s_j replaced by its series-inversion polynomial).
Polynomial giambelli_in_chern(const YoungDiagram& lambda, const UniversePtr& chern_universe);

/// Product of two Schubert classes through the (quantum) Borel presentation,
/// re-expanded in the Giambelli basis with q-powers.
struct SchubertProduct {
  struct Term {
    YoungDiagram diagram;
    unsigned q_power;
    Rational coeff;
  };
  std::vector<Term> terms;
  std::string to_string() const;
};
SchubertProduct schubert_product(const YoungDiagram& lambda, const YoungDiagram& mu, bool quantum);

}  // namespace qcw
