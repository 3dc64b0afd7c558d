#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lehmer5/fixtures.hpp"
#include "lehmer5/nib_enum.hpp"

namespace lehmer5 {

struct RowResult {
  std::string label;
  bool pass = false;
  std::string detail;
  std::optional<GroupRingUnit> witness;
};

/// Certify the printed generator, re-derive ours, orbit-match the two.
RowResult verify_generator_fixture(const GeneratorFixture& fx, long orbit_bound = 10);

/// Each xi_k against the printed Table 2 row (canonical field elements).
std::vector<RowResult> verify_table2(const Fixtures& fx);

/// u, t, T, denominators, disc; for n=14 also the published alternative
/// basis and the printed unimodular change-of-basis matrix.
RowResult verify_basis_example(const BasisExampleFixture& fx);

/// f_{-1}, the printed conjugates, the closed xi_k form and the
/// Fibonacci/Lucas parametrization on k in [-6, 6].
RowResult verify_n_minus1(const NMinus1Fixture& fx);

/// All fixture groups; `only` filters by whole token ("n=44", "table1", ...).
std::vector<RowResult> run_verification(const Fixtures& fx, const std::string& only = "",
                                        long orbit_bound = 10);

}  // namespace lehmer5
