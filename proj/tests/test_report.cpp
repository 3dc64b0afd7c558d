#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lehmer5/report.hpp"

using namespace lehmer5;
using nlohmann::json;

namespace {

void assert_no_floats(const json& j) {
  if (j.is_number_float()) FAIL("floating point token in report JSON");
  if (j.is_object())
    for (const auto& [k, v] : j.items()) assert_no_floats(v);
  if (j.is_array())
    for (const auto& v : j) assert_no_floats(v);
}

}  // namespace

TEST_CASE("analyze n=14 record matches the published row") {
  ReportRecord rec = analyze(Int(14));
  CHECK(rec.certified);
  CHECK_FALSE(rec.wild);
  REQUIRE(rec.basis.has_value());
  REQUIRE(rec.gen.has_value());
  CHECK(rec.basis->u == 44361);
  CHECK(rec.gen->denom == 71);
  REQUIRE(rec.orbit_witness.has_value());  // n=14 is a fixture row
}

TEST_CASE("JSON round-trip is lossless and float-free") {
  ReportRecord rec = analyze(Int(14));
  json j = report_to_json(rec);
  assert_no_floats(j);
  ReportRecord back = report_from_json(j);
  CHECK(report_to_json(back) == j);

  // re-certify the parsed record from coordinates alone
  FieldContext ctx{Int(14)};
  REQUIRE(back.gen.has_value());
  CHECK(certify_nib(ctx, back.gen->alpha, back.inv.conductor));
  REQUIRE(back.basis.has_value());
  CHECK(ctx.disc_of_tuple(basis_tuple(*back.basis)) == Rat(back.inv.field_disc));
  for (const FieldElement& phi : back.basis->phi) CHECK(ctx.is_integral(phi));
}

TEST_CASE("wild record") {
  ReportRecord rec = analyze(Int(10));
  CHECK(rec.wild);
  CHECK_FALSE(rec.certified);
  CHECK_FALSE(rec.basis.has_value());
  json j = report_to_json(rec);
  CHECK(j.at("wild_ramification") == true);
  assert_no_floats(j);
  ReportRecord back = report_from_json(j);
  CHECK(back.wild);
}

TEST_CASE("factor hints flow through analyze") {
  ReportRecord rec = analyze(Int(7721), {Int(26501), Int(833201)});
  CHECK(rec.certified);
  CHECK(rec.gen->denom == pow_int(Int(11), 4));
  REQUIRE(rec.orbit_witness.has_value());
}
