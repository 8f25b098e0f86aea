#pragma once

#include "leibniz/ring.hpp"

#include <string>

namespace leibniz {

// A parsed ring document: structurally valid and normalized, but not yet
// checked for well-definedness (so a checker can report that verdict
// instead of refusing to load).
struct RingDocument {
  FgAbelianGroup group;
  BracketTable table;
};

// Exact file format: {"group": [d_1,...,d_n], "bracket": B} with B[i][j] an
// n-vector of integers. Coefficients over finite factors must already lie
// in [0, d_k); anything else is a load error. Canonical output uses
// two-space indentation with the factor order as given.
RingDocument parse_ring(const std::string& text);
RingDocument load_ring(const std::string& path);

std::string ring_to_string(const LeibnizRing& r);
void save_ring(const LeibnizRing& r, const std::string& path);

LeibnizRing ring_from_document(const RingDocument& doc);

} // namespace leibniz
