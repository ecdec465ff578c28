#pragma once

#include "nfaba/baf.hpp"

#include <string>

namespace nfaba {

/// Graphviz digraph: attacks solid, supports dashed. pBAF nodes carry their
/// premise set in the label.
std::string to_dot(const Baf& baf);
std::string to_dot(const Pbaf& pbaf);

}  // namespace nfaba
