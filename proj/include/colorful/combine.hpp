#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "colorful/model.hpp"

namespace colorful {

/// One ceil(m/2)-colorful choice from d+1 color-disjoint m-colorful
/// choices, each containing the origin. Every input is pruned and split in
/// two halves that share each of its colors evenly; the kernel-sign rule
/// then keeps one half per input. Throws std::invalid_argument on malformed
/// input (wrong count, shared colors, origin outside).
ColorfulChoice combine_halve(const Instance& instance, std::span<const ColorfulChoice> choices);

/// ceil applied level times to (d+1)/2: the guarantee of sets stored at
/// `level`.
std::size_t level_guarantee(std::size_t d, std::size_t level);

/// Minimum class count for which progress is always possible:
/// d^2 (ceil(log2(d+1)) + 1) + 1.
std::size_t perfect_class_requirement(std::size_t d);

struct LevelStore {
  std::size_t level = 0;
  std::size_t multiplicity = 0;
  std::size_t guarantee = 0;
};

struct FindPerfectResult {
  ColorfulChoice choice;
  std::vector<LevelStore> stores;   // every set stored above level 0, in order
  std::size_t combinations = 0;
  std::size_t returned_colors = 0;  // colors sent back to level 0
};

/// Perfect colorful choice by repeated halving over a level array. Sets are
/// taken oldest first from the highest level holding d+1 of them; after
/// each combination the result is pruned, and every color of the consumed
/// sets that the pruned result lacks goes back to level 0 as its full
/// class. Throws std::runtime_error if no level holds d+1 sets, and
/// std::logic_error if a stored set breaks its level guarantee.
FindPerfectResult find_perfect(const Instance& instance);

}  // namespace colorful
