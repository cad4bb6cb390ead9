#pragma once

// Exhaustive search for contact B0-VPG representations of small graphs. It
// does not use any structural characterization, so it can be used to check
// the recognizers.

#include <cstdint>
#include <optional>

#include "cvpg/graph.hpp"
#include "cvpg/grid_rep.hpp"

namespace cvpg {

struct SearchConfig {
    // Bounds on the number of distinct row / column coordinates. 0 means 2n.
    // Since contacts depend only on coordinate order, this is the same as a
    // max_rows x max_cols grid.
    int max_rows = 0;
    int max_cols = 0;
    // 0 means no limit.
    std::int64_t time_budget_ms = 0;
    bool symmetry_breaking = true;
};

enum class OracleVerdict { Yes, No, Unknown };

const char* oracle_verdict_name(OracleVerdict v);

struct SearchResult {
    OracleVerdict verdict = OracleVerdict::Unknown;
    std::optional<GridRepresentation> rep;  // set iff verdict == Yes
    std::uint64_t nodes = 0;
};

// Backtracking over order types: every path is placed relative to the
// coordinates already in use, touching its earliest placed neighbour, and
// checked against every placed path. No is returned only when the search
// space is exhausted; a hit time budget gives Unknown.
SearchResult search_representation(const Graph& g, const SearchConfig& cfg = {});

// Default bounds (2n x 2n). The time budget is read from VPG_TIME_BUDGET_MS
// (default 60000).
OracleVerdict is_contact_b0vpg_small(const Graph& g);

std::int64_t default_time_budget_ms();

}  // namespace cvpg
