#pragma once

#include <iosfwd>
#include <string>

#include "fibfub/sequences.hpp"

namespace fibfub::cli {

using comb::SequenceTable;

/// OEIS b-file style: one "index value" pair per line, newline-terminated.
void write_bfile(std::ostream& os, const SequenceTable& table);

/// Parses a b-file back into a table; indices must be contiguous ascending.
/// Throws std::invalid_argument on malformed input.
SequenceTable parse_bfile(std::istream& is, const std::string& name);

/// CSV with header "n,value".
void write_csv(std::ostream& os, const SequenceTable& table);

/// JSON array of decimal strings (strings so that big values survive any
/// JSON consumer).
void write_json(std::ostream& os, const SequenceTable& table);

}  // namespace fibfub::cli
