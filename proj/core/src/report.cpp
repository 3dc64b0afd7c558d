#include "lehmer5/report.hpp"

#include <sstream>

#include "lehmer5/errors.hpp"
#include "lehmer5/fixtures.hpp"

namespace lehmer5 {

namespace {

using nlohmann::json;

json element_to_json(const FieldElement& x) {
  json out = json::array();
  for (const Rat& c : x.c) out.push_back(to_string(c));
  return out;
}

FieldElement element_from_json(const json& j) {
  FieldElement x;
  for (int i = 0; i < 5; ++i) x.c[i] = parse_rat(j.at(i).get<std::string>());
  return x;
}

json witness_to_json(const GroupRingUnit& u) {
  return json{{"sign", u.sign}, {"ell", u.ell}, {"k", u.k}};
}

const GeneratorFixture* fixture_for(const Int& n) {
  for (const auto& row : fixtures().table1)
    if (Int(row.n) == n) return &row;
  for (const auto& row : fixtures().large_examples)
    if (Int(row.n) == n) return &row;
  return nullptr;
}

}  // namespace

ReportRecord analyze(const Int& n, const std::vector<Int>& hints, long orbit_bound,
                     const FactorOptions& opt) {
  ReportRecord rec;
  rec.inv = compute_invariants(n, hints, opt);
  if (!rec.inv.tame) {
    rec.wild = true;
    rec.certified = false;
    return rec;
  }
  FieldContext ctx{n};
  rec.basis = build_integral_basis(ctx, rec.inv);
  rec.gen = build_nib_generator(ctx, rec.inv);
  rec.certified = rec.basis->certified && rec.gen->certified;

  if (const GeneratorFixture* fx = fixture_for(n)) {
    NibGenerator printed =
        make_generator(ctx, rec.inv, fx->beta, -fx->constant, fx->denom);
    if (printed.certified)
      rec.orbit_witness = orbit_match(ctx, rec.gen->alpha, printed.alpha, orbit_bound);
  }
  return rec;
}

json report_to_json(const ReportRecord& rec) {
  json j;
  j["n"] = to_string(rec.inv.n);
  j["delta"] = to_string(rec.inv.delta);
  j["Delta"] = to_string(rec.inv.Delta);
  json fac = json::array();
  for (const auto& [p, m] : rec.inv.factorization)
    fac.push_back(json::array({to_string(p), m}));
  j["factorization"] = fac;
  j["a"] = to_string(rec.inv.a);
  j["b"] = to_string(rec.inv.b);
  j["c"] = to_string(rec.inv.c);
  j["d"] = to_string(rec.inv.d);
  j["e"] = to_string(rec.inv.e);
  j["conductor"] = to_string(rec.inv.conductor);
  j["field_disc"] = to_string(rec.inv.field_disc);
  j["legendre_n5"] = rec.inv.legendre_n5;
  j["tame"] = rec.inv.tame;
  j["certified"] = rec.certified;
  if (rec.wild) {
    j["wild_ramification"] = true;
    j["reason"] = "5 | n: wildly ramified, no normal integral basis exists (Hilbert-Speiser)";
    return j;
  }
  if (rec.basis) {
    j["u"] = to_string(rec.basis->u);
    j["t"] = to_string(rec.basis->t);
    json basis = json::array();
    for (const FieldElement& x : basis_tuple(*rec.basis)) basis.push_back(element_to_json(x));
    j["integral_basis"] = basis;
    json denoms = json::array();
    for (const Int& d : rec.basis->denominators) denoms.push_back(to_string(d));
    j["phi_denominators"] = denoms;
  }
  if (rec.gen) {
    json beta = json::array();
    for (const Int& b : rec.gen->beta) beta.push_back(to_string(b));
    j["beta"] = beta;
    j["m"] = to_string(rec.gen->m);
    j["denom"] = to_string(rec.gen->denom);
    j["nib_generator"] = element_to_json(rec.gen->alpha);
  }
  if (rec.orbit_witness) j["orbit_witness"] = witness_to_json(*rec.orbit_witness);
  return j;
}

ReportRecord report_from_json(const json& j) {
  ReportRecord rec;
  Int n = parse_int(j.at("n").get<std::string>());
  std::vector<Int> hints;
  for (const auto& pm : j.at("factorization"))
    hints.push_back(parse_int(pm.at(0).get<std::string>()));
  rec.inv = compute_invariants(n, hints);
  rec.certified = j.at("certified").get<bool>();
  rec.wild = j.value("wild_ramification", false);
  if (rec.wild) return rec;

  if (j.contains("integral_basis")) {
    IntegralBasis basis;
    basis.u = parse_int(j.at("u").get<std::string>());
    basis.t = parse_int(j.at("t").get<std::string>());
    const json& tuples = j.at("integral_basis");
    for (int i = 0; i < 4; ++i) basis.phi[i] = element_from_json(tuples.at(i + 1));
    for (int i = 0; i < 4; ++i)
      basis.denominators[i] = parse_int(j.at("phi_denominators").at(i).get<std::string>());
    basis.T = Rat(basis.denominators[3]) * basis.phi[3];
    basis.certified = rec.certified;
    rec.basis = std::move(basis);
  }
  if (j.contains("nib_generator")) {
    NibGenerator gen;
    for (int i = 0; i < 4; ++i) gen.beta[i] = parse_int(j.at("beta").at(i).get<std::string>());
    gen.m = parse_int(j.at("m").get<std::string>());
    gen.denom = parse_int(j.at("denom").get<std::string>());
    gen.alpha = element_from_json(j.at("nib_generator"));
    gen.certified = rec.certified;
    rec.gen = std::move(gen);
  }
  if (j.contains("orbit_witness")) {
    const json& w = j.at("orbit_witness");
    rec.orbit_witness =
        GroupRingUnit{w.at("sign").get<int>(), w.at("ell").get<int>(), w.at("k").get<long>()};
  }
  return rec;
}

std::string report_human(const ReportRecord& rec) {
  std::ostringstream os;
  auto line = [&](const char* key, const std::string& val) {
    os << "  " << key;
    for (size_t i = std::string(key).size(); i < 16; ++i) os << ' ';
    os << val << "\n";
  };
  os << "n = " << to_string(rec.inv.n) << "\n";
  line("delta", to_string(rec.inv.delta));
  std::string fac;
  for (const auto& [p, m] : rec.inv.factorization) {
    if (!fac.empty()) fac += " * ";
    fac += to_string(p);
    if (m > 1) fac += "^" + std::to_string(m);
  }
  line("Delta", to_string(rec.inv.Delta) + (fac.empty() ? "" : " = " + fac));
  line("(a,b,c,d,e)", "(" + to_string(rec.inv.a) + ", " + to_string(rec.inv.b) + ", " +
                          to_string(rec.inv.c) + ", " + to_string(rec.inv.d) + ", " +
                          to_string(rec.inv.e) + ")");
  line("conductor", to_string(rec.inv.conductor));
  line("disc", to_string(rec.inv.field_disc));
  if (rec.wild) {
    os << "  wildly ramified (5 | n): no normal integral basis exists\n";
    return os.str();
  }
  line("(n/5)", rec.inv.legendre_n5 > 0 ? "+1" : "-1");
  if (rec.basis) {
    line("u", to_string(rec.basis->u));
    line("t", to_string(rec.basis->t));
    auto bt = basis_tuple(*rec.basis);
    for (int i = 1; i < 5; ++i)
      line(("phi_" + std::to_string(i)).c_str(), bt[i].str());
  }
  if (rec.gen) {
    std::string beta = "(";
    for (int i = 0; i < 4; ++i) beta += to_string(rec.gen->beta[i]) + (i < 3 ? ", " : ")");
    line("beta", beta);
    line("m", to_string(rec.gen->m));
    line("denom", to_string(rec.gen->denom));
    line("generator", rec.gen->alpha.str());
  }
  line("certified", rec.certified ? "true" : "false");
  if (rec.orbit_witness)
    line("fixture match", "(sign, ell, k) = (" + std::string(rec.orbit_witness->sign > 0 ? "+" : "-") +
                              ", " + std::to_string(rec.orbit_witness->ell) + ", " +
                              std::to_string(rec.orbit_witness->k) + ")");
  return os.str();
}

}  // namespace lehmer5
