#pragma once

// Text formats for instances, outcomes and the source problems of the
// reductions. All formats are JSON; serialization is canonical, so a parsed
// file serializes back to identical bytes.

#include <filesystem>
#include <string>

#include "hdg/reductions.hpp"
#include "hdg/stability.hpp"

namespace hdg {

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// An outcome is a list of agent-id lists.
Json outcome_to_json(const Outcome& outcome);
Outcome outcome_from_json(const Json& j, int n);

std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);
std::string serialize_outcome(const Outcome& outcome);
Outcome parse_outcome(const std::string& text, int n);

/// File helpers. Reading failures and malformed JSON raise ParseError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
Json read_json_file(const std::filesystem::path& path);
Instance read_instance_file(const std::filesystem::path& path);

// Source problems, as consumed by `gen`.
X3CInput x3c_from_json(const Json& j);                // {"universe": 3, "sets": [[0,1,2]]}
std::vector<int> partition_from_json(const Json& j);  // {"numbers": [1,1]}
MssInput mss_from_json(const Json& j);                // {"sets": [[[1]]], "target": [1]}
IndSetInput indset_from_json(const Json& j);          // {"vertices": 3, "edges": [[0,1]], "k": 2}
SGaspInstance sgasp_from_json(const Json& j);         // {"participants", "activities", "approved": [[[a,t],...],...]}

}  // namespace hdg
