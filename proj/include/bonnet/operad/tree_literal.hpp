#pragma once

#include "bonnet/operad/port_tree.hpp"

#include <string>
#include <string_view>

namespace bonnet::operad {

// Nested parentheses over ports 1..m-1; port 0 is the root and is implicit.
// "(1,2,3)" is the 4-port corolla, "((1,2),3)" has the split {1,2}.
// Children are printed in order of their smallest port.
std::string to_literal(const PortTree& t);
PortTree parse_tree(std::string_view text);

}  // namespace bonnet::operad
