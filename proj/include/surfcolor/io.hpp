#pragma once

// Line-oriented text format for embedded instances.
//
//   surface <euler genus> <cuffs> <orientable 0|1>
//   v <id>
//   e <id> <u> <v> <+|->
//   rot <v> <dart ids, clockwise>      dart 2e leaves u, 2e+1 leaves v
//   cuff <vertex ids along the cycle>
//   color <v> <1|2|3>
//   # comment

#include <string>
#include <string_view>

#include "surfcolor/decide.hpp"

namespace surfcolor {

struct Instance {
  EmbeddedGraph graph;
  Precoloring psi;  // sized to the vertex capacity; 0 = free
};

// Throws ParseError (message starts with "line N") or ValidationError.
Instance parse_instance(std::string_view text);

// Canonical form: ids ascending, one record per line, no comments.
std::string emit_instance(const EmbeddedGraph& g, const Precoloring& psi = {});

Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const EmbeddedGraph& g,
                         const Precoloring& psi = {});

}  // namespace surfcolor
