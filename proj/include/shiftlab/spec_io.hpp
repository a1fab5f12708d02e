// spec_io.hpp -- parsing shift-family descriptions.
//
// Two input forms are accepted:
//   * a JSON document, one object per spec (see docs/formats.md), and
//   * a compact string used on the command line, e.g. "dyck:2",
//     "sgap:pow2", "sgap:1,2,4", "beta:fig3", "beta:22102",
//     "star:(sgap:pow2)", "product:(sgap:pow2,dyck:2)",
//     "sft:01:{11}" (alphabet symbols, then forbidden words).
// Unknown JSON keys are rejected.
#pragma once

#include "shiftlab/shift_spec.hpp"

#include <string>

namespace shiftlab {

SpecPtr parse_spec_json(const std::string& json_text);
SpecPtr parse_spec_compact(const std::string& text);
/// Reads a file and parses it as a JSON spec document.
SpecPtr load_spec_file(const std::string& path);

}  // namespace shiftlab
