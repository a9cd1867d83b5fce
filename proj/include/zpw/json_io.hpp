#pragma once

// JSON / CSV serializers used by the CLI and the integration tests.
// Top-level documents carry a "schema": "v1" field; inner builders do not.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zpw/bounds.hpp"
#include "zpw/dlvp.hpp"
#include "zpw/energy.hpp"
#include "zpw/scattered.hpp"
#include "zpw/spectral.hpp"
#include "zpw/structure.hpp"
#include "zpw/suites.hpp"

namespace zpw::io {

using json = nlohmann::ordered_json;

// Fresh document with the version tag already in first position.
json make_document(const std::string& command);

json json_norm(const NormResult& r);
json json_spectrum(const Spectrum& s);
json json_energy(const EnergyReport& r);
json json_suite(const SuiteResult& r);
json json_trace(const TraceReport& r);
json json_dilate(const std::vector<std::int64_t>& generators,
                 const std::vector<std::int64_t>& targets,
                 const DilateWitness* witness);
json json_gap(const GapDescriptor& g, const GapEnumeration& e);
json json_ap_cover(const ApCoverResult& r);
json json_quad(const ContinuousL1Result& r);
json json_search(std::int64_t p, std::int64_t n, const std::string& strategy,
                 const SearchResult& r);

// One header line plus one data row, matching the documented columns.
std::string csv_search(std::int64_t p, std::int64_t n,
                       const std::string& strategy, const SearchResult& r);

}  // namespace zpw::io
