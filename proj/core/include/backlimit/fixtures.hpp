#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "backlimit/pl_map.hpp"

namespace backlimit {

struct FixtureProperty {
    std::string claim;
    std::string provenance;
};

struct Fixture {
    std::string name;
    PLMap map;
    std::vector<FixtureProperty> documented_properties;
};

/// Built-in maps:
///   tent      (0,0) (1/2,1) (1,0)
///   identity  (0,0) (1,1)
///   fig1      (0,0) (1/4,1) (5/8,1/2) (1,1)
/// `fig1` has laps 4x, 1-(4/3)(x-1/4), 1/2+(4/3)(x-5/8): 1/4 has the single
/// backward branch 4^{-(k+1)} -> 0, 1/4 is wandering, and 1/4 is a preimage
/// of the fixed point 1 at every level.
/// Throws DomainError for unknown names.
Fixture fixture(std::string_view name);

/// Names in sorted order.
std::vector<std::string> list_fixtures();

}  // namespace backlimit
