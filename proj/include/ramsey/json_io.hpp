#pragma once

#include "ramsey/arrow.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/triples.hpp"

#include <json.hpp>

#include <string_view>

namespace ramsey {

using Json = nlohmann::ordered_json;

// Parses JSON text; syntax errors become ParseError with the byte offset.
Json parse_json(std::string_view text);

// {"domain": [...], "triples": [[a,b,c], ...]}
Json to_json(const TripleStructure& g);
TripleStructure triple_structure_from_json(const Json& j);

// {"host": newick, "pattern": newick, "k": k, "assignment": [{"copy": [...], "color": c}, ...]}
// Every copy must be assigned exactly once.
Json to_json(const Coloring& chi);
Coloring coloring_from_json(const Json& j);

// {"verdict": ..., "witness": coloring | null, "nodes": n, "millis": t}
Json to_json(const ArrowVerdict& v, bool with_timing = true);

// {"trees": [newick, ...], "pattern": newick, "k": k}
Json to_json(const ReductionChain& chain);
ReductionChain chain_from_json(const Json& j);

// {"copy": [...], "color": c}
Json to_json(const MonoCopy& m);

} // namespace ramsey
