#pragma once

#include <utility>
#include <vector>

#include "virtstring/polynomial.hpp"
#include "virtstring/string_core.hpp"

namespace vstr {

IntPoly u(const VirtualString& s);
long long u_k(const VirtualString& s, int k);
IntPoly higher_u(const VirtualString& s, const std::vector<int>& rs);
// (u+, u-)
std::pair<IntPoly, IntPoly> u_open(const OpenString& mu);
// throws PreconditionError unless p(0) = 0 and p'(1) = 0
VirtualString realize_u(const IntPoly& p);

}  // namespace vstr
