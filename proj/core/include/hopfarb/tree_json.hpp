#pragma once

#include <string>
#include <string_view>

#include "hopfarb/plane_tree.hpp"

namespace hopfarb {

// {"label": "+"|"-", "children": [ ... ]}, nested recursively, compact.
std::string tree_to_json(const PlaneTree& t);

// Inverse of tree_to_json. Throws ParseError on malformed JSON and
// DomainError on a well-formed document of the wrong shape.
PlaneTree tree_from_json(std::string_view json);

}  // namespace hopfarb
