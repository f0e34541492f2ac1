#pragma once

// JSON graph schema: {"m","n","ext_t","ext_a","int_t","int_a","edges":
// [[ep,ep,"full"|"dashed"],...], "orientation":[...], and for m = 1 either
// "order":[...] or "lie":[[...],...]}.  Internal endpoints are written
// "t#i"/"a#i"; orientation entries are "e<i>" (edge index) or endpoints.

#include <json.hpp>

#include "vgc/cooperad.hpp"
#include "vgc/graph.hpp"
#include "vgc/presentation.hpp"

namespace vgc {

nlohmann::json graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const nlohmann::json& j);

nlohmann::json graph_sum_to_json(const GraphSum& s);
nlohmann::json tensor_pair_sum_to_json(const TensorPairSum& s);

nlohmann::json monomial_to_json(const PresMonomial& m, const Signature& sig,
                                const Rational& coef);
nlohmann::json presentation_to_json(const PresentationElement& x);

}  // namespace vgc
