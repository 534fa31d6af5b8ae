#pragma once

// JSON and CSV renderings of graphs, spectra, pair verdicts, search records
// and verification reports. Key order is fixed so output is byte-stable.

#include <json.hpp>

#include <string>
#include <vector>

#include "circspec/core.hpp"
#include "circspec/cospectral.hpp"
#include "circspec/prime.hpp"
#include "circspec/spectra.hpp"

namespace circspec::io {

using Json = nlohmann::ordered_json;

/// {"n": n, "set": [...]}
Json graph_json(const ConnectionSet& cs);
/// Inverse of graph_json; validates symmetry of the set.
ConnectionSet graph_from_json(const Json& j);

/// {"n", "set", "eigenvalues", "power_sums" (decimal strings), "inertia"}
Json spectrum_json(const CirculantGraph& g, const spectra::Spectrum& s, const spectra::PowerSums& sums,
                   const Inertia& in);

Json verdict_json(const PairVerdict& v);

/// {"n", "set1", "set2", "cospectral", "sc", "same_inertia", "isomorphic"}
Json search_record_json(const cospectral::SearchRecord& r);
Json search_summary_json(const cospectral::SearchSummary& s);

std::string csv_header_search();
std::string search_record_csv(const cospectral::SearchRecord& r);

/// {"p", "num_sets", "num_signature_groups", "pairs_checked", "violations"}
Json verify_report_json(const prime::VerifyReport& r);

/// Space-free "[1,2,10,11]" form used inside CSV cells.
std::string set_string(const ConnectionSet& cs);

}  // namespace circspec::io
