#pragma once

#include <string>
#include <string_view>

#include "slicepl/function.hpp"

namespace slicepl {

// JSON function specs, one object per node:
//   {"type":"power_series","coeffs":[[w,x,y,z],...],"tail":{"constant":C,"ratio":x}}
//   {"type":"identity"}  {"type":"constant","c":[w,x,y,z]}  {"type":"real_constant","t":t}
//   {"type":"sum","terms":[...]}
//   {"type":"exp"|"log"|"branch_log"|"negate","arg":...}
//   {"type":"pow","gamma":g,"arg":...}  {"type":"shift","t":t,"arg":...}
//   {"type":"right_scale","c":[w,x,y,z],"arg":...}
//   {"type":"product","left":...,"right":...}  {"type":"compose","outer":...,"inner":...}
// "arg" defaults to the identity. A quaternion may also be given as a bare
// real number. Throws InputError (CompositionError for rejected products and
// compositions) with the JSON path of the offending node.
Function parse_function_json(std::string_view text);
Function load_function(const std::string& path);

// Inverse of parse_function_json; round-trips exactly.
std::string function_to_json(const Function& f);

}  // namespace slicepl
