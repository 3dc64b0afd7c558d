#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lehmer5/factor.hpp"
#include "lehmer5/integers.hpp"

namespace lehmer5 {

/// One printed NIB generator row: (beta_0 rho + ... + beta_3 rho^(3) + constant)/denom.
struct GeneratorFixture {
  long n = 0;
  std::string source;  // Table1, ExampleD, ExampleE, ExampleTwo
  Factorization delta_factors;
  std::vector<Int> conductor_factors;
  Int denom;
  std::array<Int, 4> beta;
  Int constant;  // equals -m
};

struct Table2Fixture {
  struct Row {
    long k = 0;
    Int constant;
    std::array<Int, 5> conj;  // coefficients of rho^(0)..rho^(4)
  };
  Int denom;  // 355
  std::vector<Row> rows;
};

/// Printed integral-basis example data (u, t, T, denominators), optionally
/// with the published alternative basis and change-of-basis matrix.
struct BasisExampleFixture {
  long n = 0;
  Int u, t;
  std::array<Int, 5> T_coeffs;     // constant term first
  std::array<Int, 4> phi_denoms;
  struct AltBasis {
    Int v4_denom, v5_denom;
    std::array<Int, 5> v4_num, v5_num;
    std::array<std::array<Int, 5>, 5> change_of_basis;
  };
  std::optional<AltBasis> alt;
};

struct NMinus1Fixture {
  std::array<Int, 6> f;  // constant term first
  std::array<std::array<Int, 5>, 5> conjugates;
};

struct Fixtures {
  std::vector<GeneratorFixture> table1;
  Table2Fixture table2;
  BasisExampleFixture example_n14;
  BasisExampleFixture example_n44;
  NMinus1Fixture example_n_minus1;
  std::vector<GeneratorFixture> large_examples;
};

Fixtures parse_fixtures(const std::string& json_text);
Fixtures load_fixtures_file(const std::string& path);

/// The fixture set compiled into the library (core/data/fixtures.json).
const Fixtures& fixtures();

/// Generated from data/fixtures.json at build time.
const char* embedded_fixtures_json();

}  // namespace lehmer5
