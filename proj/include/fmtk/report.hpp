#pragma once

#include <string>

#include "json.hpp"

#include "fmtk/autgroup.hpp"
#include "fmtk/discern.hpp"
#include "fmtk/ef.hpp"
#include "fmtk/frege.hpp"
#include "fmtk/quotient.hpp"
#include "fmtk/structure.hpp"

namespace fmtk {

inline constexpr const char* kToolVersion = "fmtk 0.1.0";
inline constexpr int kReportVersion = 1;

/// Insertion-ordered JSON keeps structured reports byte-stable.
using Json = nlohmann::ordered_json;

Json formula_json(const Signature& sig, const Formula& f);
Json partition_json(const Partition& p);
Json group_json(const Group& g);
Json validation_json(const ValidationReport& r);
Json classification_json(const Signature& sig, const PairClassification& pc);
Json chain_json(const Signature& sig, const ChainReport& r);
Json frege_json(const FregeReport& r);
Json transfer_json(const Signature& sig, const TransferReport& r);
Json ef_json(const EfResult& r);

/// Standard top-level envelope for every structured report.
Json report_envelope(const std::string& command, const std::string& digest, Json payload);

}  // namespace fmtk
