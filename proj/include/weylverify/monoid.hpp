#pragma once

#include "weylverify/rootdata.hpp"

#include <vector>

namespace wv {

// Saturation of the free monoid N<E>: every dominant element of Z<E> lies in N<E>.
// Decided by the simple-root pattern test: each lambda_i needs a simple root
// pairing nonzero with lambda_i and zero with every other element of E.
bool is_saturated_criterion(const std::vector<Weight>& E, const GroupSpec& spec);

// Oracle: enumerate integer combinations with |c_i| <= box and look for a
// dominant one with a negative coefficient.
bool is_saturated_bruteforce(const std::vector<Weight>& E, const GroupSpec& spec, int box);

}  // namespace wv
