#pragma once

#include <filesystem>
#include <string>

#include "ringged/graph.hpp"

namespace ringged {

// JSON dataset format (indices 1-based):
// {"node_label_kind":"vector|symbol","edge_label_kind":"vector|symbol",
//  "graphs":[{"id":str,"class":str?,"nodes":[label...],"edges":[[i,j,label]...]}]}

/// Throws ValidationError with graph id and location on malformed input.
GraphCollection load_collection(const std::filesystem::path& path);
GraphCollection parse_collection(const std::string& json_text);

std::string serialize_collection(const GraphCollection& collection);
void save_collection(const GraphCollection& collection, const std::filesystem::path& path);

}  // namespace ringged
