#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modspace/function_expr.hpp"

namespace modspace {

/// A named member of the randomized test family.
struct FamilyMember {
    std::string label;
    FunctionExpr expr;
};

/// Seeded family of compactly supported test functions, every member with
/// tracked support radius <= radius: translated bumps times plane waves and
/// chirps. Identical (seed, radius, count) always yields the same family.
std::vector<FamilyMember> test_family(std::uint64_t seed, double radius,
                                      int count = 10);

/// Just the expressions.
std::vector<FunctionExpr> test_family_exprs(std::uint64_t seed, double radius,
                                            int count = 10);

} // namespace modspace
