#pragma once

#include <string>
#include <vector>

#include "qcw/spaces.hpp"

namespace qcw {

/// One recorded quantum product: lhs1 o lhs2 = expected, where the sides are
/// written in the space's basis labels (plus x2 for the Hirzebruch surfaces)
/// and quantum parameters. The values are fixture data, kept separate from
/// the engine so tests compare two independent sources.
struct ProductFixture {
  std::string space_id;
  std::string lhs1;
  std::string lhs2;
  std::string expected;
  std::string citation;
};

std::vector<ProductFixture> appendix1_product_fixtures();  // all 15 F3 products
std::vector<ProductFixture> appendix2_product_fixtures();  // Sigma_0 and Sigma_1

/// Expression universe for a space: basis labels as symbols (with their
/// degrees) plus the quantum parameters, together with the map to lifts.
struct FixtureContext {
  Space space;
  NormalFormEngine engine;
  std::vector<BasisClass> basis;
  UniversePtr expr_universe;
  std::map<std::string, Polynomial> symbol_lifts;
};
FixtureContext make_fixture_context(const std::string& space_id);

/// Maps a label expression ("a2 + q1") to its lift polynomial.
Polynomial parse_fixture_expression(const FixtureContext& ctx, const std::string& text);

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;
  std::string citation;
};

/// Checks one product fixture: the engine's basis-solve expansion of
/// lhs1*lhs2 must equal the recorded value in the quotient ring.
FixtureResult check_product_fixture(const FixtureContext& ctx, const ProductFixture& fx);

/// The verify-all suite: Appendix 1 table, Appendix 2 table, the section-4
/// Gr_2(C^4) identities, the section-5 brackets, the section-6 annihilations.
std::vector<FixtureResult> run_fixture_suite();

}  // namespace qcw
