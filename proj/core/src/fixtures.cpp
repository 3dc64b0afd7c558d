#include "lehmer5/fixtures.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lehmer5/errors.hpp"

namespace lehmer5 {

namespace {

using nlohmann::json;

template <size_t N>
std::array<Int, N> int_array(const json& j) {
  if (j.size() != N) throw Error("fixtures: expected array of size " + std::to_string(N));
  std::array<Int, N> out;
  for (size_t i = 0; i < N; ++i) out[i] = parse_int(j[i].get<std::string>());
  return out;
}

GeneratorFixture parse_generator(const json& j) {
  GeneratorFixture g;
  g.n = j.at("n").get<long>();
  g.source = j.at("source").get<std::string>();
  for (const auto& pm : j.at("delta_factors"))
    g.delta_factors.emplace_back(parse_int(pm[0].get<std::string>()), pm[1].get<unsigned>());
  for (const auto& c : j.at("conductor_factors"))
    g.conductor_factors.push_back(parse_int(c.get<std::string>()));
  g.denom = parse_int(j.at("denom").get<std::string>());
  g.beta = int_array<4>(j.at("beta"));
  g.constant = parse_int(j.at("constant").get<std::string>());
  return g;
}

BasisExampleFixture parse_basis_example(const json& j) {
  BasisExampleFixture b;
  b.n = j.at("n").get<long>();
  b.u = parse_int(j.at("u").get<std::string>());
  b.t = parse_int(j.at("t").get<std::string>());
  b.T_coeffs = int_array<5>(j.at("T"));
  b.phi_denoms = int_array<4>(j.at("phi_denoms"));
  if (j.contains("alt_basis")) {
    const json& a = j.at("alt_basis");
    BasisExampleFixture::AltBasis alt;
    alt.v4_denom = parse_int(a.at("v4_denom").get<std::string>());
    alt.v5_denom = parse_int(a.at("v5_denom").get<std::string>());
    alt.v4_num = int_array<5>(a.at("v4_num"));
    alt.v5_num = int_array<5>(a.at("v5_num"));
    const json& rows = a.at("change_of_basis");
    for (int r = 0; r < 5; ++r) alt.change_of_basis[r] = int_array<5>(rows.at(r));
    b.alt = std::move(alt);
  }
  return b;
}

}  // namespace

Fixtures parse_fixtures(const std::string& json_text) {
  json j = json::parse(json_text);
  Fixtures fx;
  for (const auto& row : j.at("table1")) fx.table1.push_back(parse_generator(row));

  const json& t2 = j.at("table2_n14");
  fx.table2.denom = parse_int(t2.at("denom").get<std::string>());
  for (const auto& row : t2.at("rows")) {
    Table2Fixture::Row r;
    r.k = row.at("k").get<long>();
    r.constant = parse_int(row.at("constant").get<std::string>());
    r.conj = int_array<5>(row.at("conj"));
    fx.table2.rows.push_back(std::move(r));
  }

  fx.example_n14 = parse_basis_example(j.at("example_n14"));
  fx.example_n44 = parse_basis_example(j.at("example_n44"));

  const json& m1 = j.at("example_n_minus1");
  fx.example_n_minus1.f = int_array<6>(m1.at("f"));
  for (int r = 0; r < 5; ++r)
    fx.example_n_minus1.conjugates[r] = int_array<5>(m1.at("conjugates").at(r));

  for (const auto& row : j.at("large_examples"))
    fx.large_examples.push_back(parse_generator(row));
  return fx;
}

Fixtures load_fixtures_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixtures file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixtures(ss.str());
}

const Fixtures& fixtures() {
  static const Fixtures fx = parse_fixtures(embedded_fixtures_json());
  return fx;
}

}  // namespace lehmer5
