#pragma once

#include <string>
#include <string_view>

#include "locyc/criteria.hpp"
#include "locyc/cycles.hpp"
#include "locyc/game.hpp"
#include "locyc/harness/config.hpp"
#include "locyc/ramsey.hpp"
#include "locyc/random_graphs.hpp"

namespace locyc::harness {

/// Hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// Reference to a graph: n, m, and the digest of its edge-list text.
Json graph_ref(const Graph& g, const std::string& path = {});

Json to_json(const VertexSet& set);
Json to_json(const CycleCertificate& cert);
Json to_json(const ExpansionAudit& audit);
Json to_json(const DensityReport& report);
Json to_json(const DensityParams& params);
Json to_json(const MonochromaticReport& report);
Json to_json(const LowerBoundReport& report);
Json to_json(const UpperBoundReport& report);
Json to_json(const SeriesValue& series);
/// Game summary; the transcript itself is exported separately.
Json to_json(const GameState& state);
Json to_json(const GamePipelineReport& report);

/// JSON lines (round, actor, u, v), one per transcript entry.
std::string transcript_lines(const GameState& state);

}  // namespace locyc::harness
