#pragma once

#include <string>
#include <string_view>

#include "slicepl/domain.hpp"

namespace slicepl {

// JSON domain specs:
//   {"type":"cone","phi":p}  {"type":"ball","center":[w,x,y,z],"radius":R}
//   {"type":"angular","zeta":PROFILE,"phi":PROFILE}
//   {"type":"strip","gamma":PROFILE,"line":LINE}  {"type":"space"}
// PROFILE is a number (constant), "zero", or one of the builtin profiles
//   {"name":"constant","value":v}
//   {"name":"odd_harmonic","amplitude":a,"axis":[x,y,z]}        a <I, axis>
//   {"name":"even_harmonic","base":b,"amplitude":a,"axis":[x,y,z]}  b + a <I, axis>^2
// LINE is "real_axis" or {"point":[a,b],"direction":[u,v]}, the same line of
// slice coordinates on every L_I.
Domain parse_domain_json(std::string_view text);
Domain load_domain(const std::string& path);

ScalarProfile parse_profile_json(std::string_view text);

}  // namespace slicepl
