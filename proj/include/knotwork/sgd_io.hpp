#pragma once

#include <string>

#include "knotwork/diagram.hpp"

namespace knotwork {

// Line-based text format for diagrams ('#' starts a comment):
//   X <id> <h0> <h1> <h2> <h3>   crossing, slots counterclockwise from the
//                                incoming under-strand
//   V <id> <h1> ... <hk>         node with counterclockwise rotation
//   P <ha> <hb>                  arc pairing two half-edges
//   L <arc-index> <label>        label for the arc of the i-th P line (0-based)
//   O <label>                    free loop (closed strand, no crossings)
//   F <family> [params]          family tag: knot | theta | theta-n n |
//                                oplus n k | G n k i | raw
std::string to_sgd(const SpatialDiagram& d);
SpatialDiagram parse_sgd(const std::string& text);

SpatialDiagram load_sgd(const std::string& path);
void save_sgd(const SpatialDiagram& d, const std::string& path);

}  // namespace knotwork
