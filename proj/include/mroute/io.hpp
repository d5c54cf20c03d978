#pragma once

#include <string>
#include <vector>

#include "mroute/road_network.hpp"

namespace mroute {

struct QueryResult; // query.hpp
struct TraceRow;

// Shortest round-trip decimal; "inf" for +infinity.
std::string format_value(double v);
// Accepts "inf" and finite decimals; rejects NaN and -inf.
double parse_value(const std::string& token);

// Network files: '#' comments, `vertex <name>` and
// `edge <tail> <head> <weight> [<label>]` lines; vertices are also
// declared implicitly by mention.
Graph parse_network(const std::string& text);

// Maneuver files: `maneuver <penalty|inf> <v0> [<v1> ...]` or
// `maneuver* <penalty|inf> <v0> <edge-label>...`; a single token after
// the penalty is a zero-edge maneuver.
std::vector<Maneuver> parse_maneuvers(const std::string& text, const Graph& g);

std::string serialize_network(const Graph& g);
std::string serialize_maneuvers(const Graph& g, const std::vector<Maneuver>& ms);

// `distance <value|inf>`, a `walk` line when finite, `stat` lines.
std::string serialize_result(const Graph& g, const QueryResult& r);
QueryResult parse_result(const std::string& text, const Graph& g);

std::string serialize_trace(const std::vector<TraceRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace mroute
