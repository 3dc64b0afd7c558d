#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lehmer5/integral_basis.hpp"
#include "lehmer5/nib.hpp"
#include "lehmer5/nib_enum.hpp"

namespace lehmer5 {

/// Everything cmd_analyze reports for one n. Serialization keeps every
/// integer and rational as a decimal string; no floating point anywhere.
struct ReportRecord {
  FieldInvariants inv;
  bool wild = false;
  std::optional<IntegralBasis> basis;
  std::optional<NibGenerator> gen;
  bool certified = false;
  std::optional<GroupRingUnit> orbit_witness;  // against an embedded fixture, if one exists
};

/// Full pipeline for one n: invariants -> integral basis -> NIB generator.
/// For 5 | n the record is marked wild and carries invariants only.
ReportRecord analyze(const Int& n, const std::vector<Int>& hints = {}, long orbit_bound = 10,
                     const FactorOptions& opt = {});

nlohmann::json report_to_json(const ReportRecord& rec);
ReportRecord report_from_json(const nlohmann::json& j);
std::string report_human(const ReportRecord& rec);

}  // namespace lehmer5
