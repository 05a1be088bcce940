#pragma once

#include <string>
#include <vector>

#include "hitsets/arena.hpp"
#include "hitsets/decomposition.hpp"
#include "hitsets/disc.hpp"
#include "hitsets/graph.hpp"
#include "hitsets/halfplane.hpp"
#include "hitsets/hypergraph.hpp"

namespace hitsets {

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

std::string read_text_file(const std::string& path);

/// Writes to a temporary sibling and renames it over the target, so readers
/// never observe a half-written file.
void write_text_file(const std::string& path, const std::string& content);

// ---------------------------------------------------------------------------
// JSON documents
// ---------------------------------------------------------------------------
// Coordinates and other rationals are strings like "3/4" or "5"; plain JSON
// integers are also accepted. Non-integer JSON numbers are rejected with a
// hint to quote them, since 0.1 has no exact binary value.

Hypergraph parse_hypergraph_json(const std::string& text);
std::string hypergraph_to_json(const Hypergraph& h);

Coloring parse_coloring_json(const std::string& text);
/// A nonempty strategy is recorded alongside the colors.
std::string coloring_to_json(const Coloring& c, const std::string& strategy = "");

Graph parse_graph_json(const std::string& text);
std::string graph_to_json(const Graph& g);

std::vector<RatPoint> parse_points_json(const std::string& text);
std::string points_to_json(const std::vector<RatPoint>& pts);

// ---------------------------------------------------------------------------
// Query streams (one JSON object per line)
// ---------------------------------------------------------------------------

/// Lines of {"lo": int, "hi": int}, each realized as the interval range.
std::vector<Range> parse_interval_queries(const std::string& text);
std::string interval_queries_to_jsonl(const std::vector<Range>& intervals);

/// Lines of {"a": rat, "b": rat, "c": rat, "side": "below"|"above"}.
std::vector<HalfPlaneQuery> parse_halfplane_queries(const std::string& text);
std::string halfplane_queries_to_jsonl(const std::vector<HalfPlaneQuery>& qs);

/// Lines of {"cx": rat, "cy": rat}; every disc has unit radius.
std::vector<DiscQuery> parse_disc_queries(const std::string& text);
std::string disc_queries_to_jsonl(const std::vector<DiscQuery>& qs);

// ---------------------------------------------------------------------------
// Forests, reports, transcripts
// ---------------------------------------------------------------------------

std::string forest_to_json(const DecompositionForest& f);

std::string ratio_report_to_json(const RatioReport& r);
std::string ratio_report_csv_header();
std::string ratio_report_csv_row(const std::string& instance_id, int n, const std::string& alg,
                                 const RatioReport& r);

/// Kind-tagged game records ("ranges", "halfplane", "disc") holding every
/// event (query, realized range, stab outcome, added points) plus the final
/// hitting set.
std::string transcript_to_json(const Transcript<Range>& t);
std::string transcript_to_json(const Transcript<HalfPlaneQuery>& t);
std::string transcript_to_json(const Transcript<DiscQuery>& t);
Transcript<HalfPlaneQuery> parse_halfplane_transcript(const std::string& text);
Transcript<DiscQuery> parse_disc_transcript(const std::string& text);

// ---------------------------------------------------------------------------
// SVG plots
// ---------------------------------------------------------------------------

/// Points, both envelopes, the query lines (dashed for side "above") and the
/// chosen stabbers. Pass empty queries/chosen for an instance-only drawing.
std::string halfplane_svg(const HalfPlaneInstance& inst,
                          const std::vector<HalfPlaneQuery>& queries, const HittingSet& chosen);

/// Tile outlines, quadrant centers, the unit discs and the chosen stabbers.
std::string disc_svg(const DiscInstance& inst, const std::vector<DiscQuery>& queries,
                     const HittingSet& chosen);

}  // namespace hitsets
