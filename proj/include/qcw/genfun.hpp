#pragma once

#include <string>
#include <vector>

#include "qcw/quotient.hpp"
#include "qcw/spaces.hpp"

namespace qcw {

/// Truncated generating function V(t,q) = sum_j (t^j / j!) <b^j, M>, held as
/// a polynomial in t_1..t_r and the quantum parameters. reliable_order tracks
/// how far the coefficients can be trusted after differentiations.
struct GeneratingFunction {
  Polynomial body;
  unsigned order = 0;
  unsigned reliable_order = 0;
  std::vector<std::string> t_names;  // t_names[i] pairs with the i-th degree-2 generator
};

/// Universe (t_1..t_r, q-vars) matching the space's quantum parameters.
UniversePtr genfun_universe(const Space& space);

/// Engine-built scalar generating function: the coefficient of t^j/j! is the
/// top-class component of the quantum power b_1^{j_1} o ... o b_r^{j_r}.
GeneratingFunction scalar_generating_function(const Space& space, const NormalFormEngine& engine,
                                              unsigned order);

/// Closed form for CP^n: sum_s t^{(n+1)s+n} / ((n+1)s+n)! q^s.
GeneratingFunction cpn_V_closed_form(int n, unsigned order);

/// Apply R(d/dt_1,...,d/dt_r, q) to V; p-variables of the space act as
/// t-derivatives, q-variables multiply. Lowers the reliable order by the
/// p-degree of R.
GeneratingFunction apply_operator(const Space& space, const Polynomial& R,
                                  const GeneratingFunction& V);

struct AnnihilationReport {
  std::string space_id;
  unsigned order = 0;
  struct Item {
    std::string operator_text;
    unsigned reliable_order = 0;
    std::size_t residual_terms = 0;
    bool annihilated = false;
  };
  std::vector<Item> relations;
  Item non_member;  // audited converse: a degree-2 generator must not annihilate
  bool pass = false;
};

/// Applies every relation of the quantum presentation to the engine-built V
/// (each must vanish to the reliable order) and one non-member operator
/// (which must not). Refuses spaces whose cohomology is not generated in
/// degree 2, matching the standing assumption of the construction.
AnnihilationReport annihilation_check(const Space& space, unsigned order);

}  // namespace qcw
