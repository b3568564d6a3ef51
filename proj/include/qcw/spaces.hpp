#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcw/quotient.hpp"

namespace qcw {

/// One of the workbench's built-in spaces, with its classical and quantum
/// presentations, the symplectic chart pairing of degree-2 generators with
/// quantum parameters, and the lifted cohomology basis used for product
/// tables, generating functions, and spectra.
struct Space {
  std::string id;       // cpn:<n>, gr:<k>:<n>, flag3, hirzebruch:<k>
  std::string family;   // projective, grassmannian, flag3, hirzebruch
  int complex_dim = 0;
  std::vector<int> c1_pairing;  // <c1 TM, D_i> per basis class of H_2
  bool degree2_generated = true;

  GradedPresentation classical;
  std::optional<GradedPresentation> quantum;

  /// Degree-2 generators in symplectic order; sympl_p[i] pairs with
  /// sympl_q[i] in the Poisson bracket.
  std::vector<std::string> sympl_p;
  std::vector<std::string> sympl_q;

  /// Lifted cohomology basis over the quantum universe (empty when the basis
  /// is computed from standard monomials instead).
  std::vector<BasisClass> basis;
  std::string top_label;

  int default_cap = 0;

  const GradedPresentation& quantum_presentation() const;
};

enum class FlagChart { X, P };

Space make_cpn(int n, FlagChart /*unused*/ = FlagChart::X);
Space make_grassmannian(int k, int n);
Space make_flag3(FlagChart chart = FlagChart::P);
Space make_hirzebruch(int k);

/// Parse a CLI space identifier; flag3 defaults to the p-chart.
Space parse_space(const std::string& id, FlagChart flag_chart = FlagChart::P);
std::vector<std::string> known_space_ids();

/// Presentation-only constructors (spec operations).
GradedPresentation cpn_presentation(int n, bool quantum);
GradedPresentation grassmannian_presentation(int k, int n, bool quantum);
GradedPresentation flag3_presentation(bool quantum, FlagChart chart);
GradedPresentation hirzebruch_presentation(int k, bool quantum);

/// F3 relations in the un-eliminated x-chart (x1,x2,x3,q1,q2), used for the
/// Toda conserved-quantity identification.
std::vector<Polynomial> flag3_raw_relations();
UniversePtr flag3_raw_universe();

/// Gromov-Witten triple product <X_i|X_j|X_k>_s on CP^n.
long cpn_gw_triple(int n, int i, int j, int k, int s);

/// Completed engine for the space (quantum or classical presentation).
NormalFormEngine make_engine(const Space& space, bool quantum, int cap_override = 0);

/// Basis classes: the recorded lifts when the space carries them, otherwise
/// the q-free standard monomials of the engine up to the top degree.
/// Verifies that per-degree counts match the classical Betti numbers.
std::vector<BasisClass> space_basis(const Space& space, const NormalFormEngine& engine);

/// All pairwise quantum products of the basis, expanded back in the basis.
struct ProductTable {
  std::vector<BasisClass> basis;
  /// entries[i][j] with i <= j
  std::map<std::pair<std::size_t, std::size_t>, BasisExpansion> entries;
};
ProductTable quantum_product_table(const NormalFormEngine& engine,
                                   const std::vector<BasisClass>& basis);

}  // namespace qcw
