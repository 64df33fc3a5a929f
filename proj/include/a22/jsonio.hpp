#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "a22/dyck.hpp"
#include "a22/laurent.hpp"
#include "a22/nondec.hpp"
#include "a22/snake.hpp"

// JSON forms (insertion-ordered output for byte stability):
//   polynomial: [{"exp":[e1..e6],"coef":c}, ...] in descending graded-lex
//   matching:   {"n":int,"edges":["rung:0","sideA:1",...]} canonical order
//   pair:       {"a1":int,"a2":int,"S1":[...],"S2":[...],"indexing":...}
//               ("0-based" on the (n+1) x n family, "1-based" otherwise)
//   path:       {"mountains":[[d,e],...]}
namespace a22::io {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const snake::PerfectMatching& m);
snake::PerfectMatching matching_from_json(const Json& j);

Json to_json(const dyck::CompatiblePair& sel);
dyck::CompatiblePair pair_from_json(const Json& j);

Json to_json(const nondec::NonDecPath& p);
nondec::NonDecPath path_from_json(const Json& j);

std::string dump(const Json& j);  // compact single line

// Parse helper for stream input; reports the 1-based line of the failure.
Json parse_document(const std::string& text);

}  // namespace a22::io
