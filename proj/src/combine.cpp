#include "colorful/combine.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "colorful/approx.hpp"
#include "colorful/caratheodory.hpp"

namespace colorful {

namespace {

// Pruned subset of a choice; throws when the origin is outside.
std::vector<PointRef> prune_refs(const Instance& instance, const std::vector<PointRef>& refs,
                                 std::vector<Rational>* weights = nullptr) {
  const auto points = gather(instance, refs);
  const auto pruned = prune_any(points);
  std::vector<PointRef> out;
  for (auto i : pruned.indices) out.push_back(refs[i]);
  if (weights) *weights = pruned.coefficients;
  return out;
}

std::vector<PointRef> full_class(const Instance& instance, std::size_t color) {
  std::vector<PointRef> refs;
  for (std::size_t i = 0; i < instance.classes()[color].points.size(); ++i)
    refs.push_back({color, i});
  return prune_refs(instance, refs);
}

}  // namespace

ColorfulChoice combine_halve(const Instance& instance, std::span<const ColorfulChoice> choices) {
  const std::size_t d = instance.dimension();
  if (choices.size() != d + 1) throw std::invalid_argument("combine_halve: needs d+1 choices");
  std::vector<int> owner(instance.num_classes(), -1);
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (choices[i].selections.empty()) throw std::invalid_argument("combine_halve: empty choice");
    if (choices[i].selections.size() > d + 1) {
      throw std::invalid_argument("combine_halve: choice has more than d+1 points");
    }
    max_multiplicity(choices[i], instance);  // validates references
    for (const auto& r : choices[i].selections) {
      if (owner[r.color] != -1 && owner[r.color] != static_cast<int>(i)) {
        throw std::invalid_argument("combine_halve: choices share a color");
      }
      owner[r.color] = static_cast<int>(i);
    }
  }

  std::vector<SplitSet> sets;
  for (const auto& choice : choices) {
    if (!origin_in_hull(gather(instance, choice.selections)).inside()) {
      throw std::invalid_argument("combine_halve: origin outside a choice");
    }
    std::vector<Rational> weights;
    const auto refs = prune_refs(instance, choice.selections, &weights);
    if (refs.size() == 1) return make_choice(refs);

    // refs is sorted by color; alternate within the running order so each
    // color splits evenly and the halves differ by at most one point.
    SplitSet s;
    std::vector<std::size_t> part1;
    for (std::size_t t = 0; t < refs.size(); ++t) {
      if (t % 2 == 0) {
        s.part1.push_back(refs[t]);
        part1.push_back(t);
      } else {
        s.part2.push_back(refs[t]);
      }
    }
    s.v = line_in_cone(gather(instance, refs), weights, part1);
    sets.push_back(std::move(s));
  }
  return make_choice(select_by_kernel(sets));
}

std::size_t level_guarantee(std::size_t d, std::size_t level) {
  std::size_t c = d + 1;
  for (std::size_t i = 0; i < level; ++i) c = (c + 1) / 2;
  return c;
}

std::size_t perfect_class_requirement(std::size_t d) {
  std::size_t log = 0;
  while ((std::size_t{1} << log) < d + 1) ++log;
  return d * d * (log + 1) + 1;
}

FindPerfectResult find_perfect(const Instance& instance) {
  const std::size_t d = instance.dimension();
  FindPerfectResult result;
  std::vector<std::deque<std::vector<PointRef>>> levels(1);

  auto push_class = [&](std::size_t color) -> bool {
    auto refs = full_class(instance, color);
    if (refs.size() == 1) {
      result.choice = make_choice(std::move(refs));
      return true;
    }
    levels[0].push_back(std::move(refs));
    return false;
  };
  for (std::size_t c = 0; c < instance.num_classes(); ++c) {
    if (push_class(c)) return result;
  }

  for (;;) {
    std::size_t level = levels.size();
    for (std::size_t i = levels.size(); i-- > 0;) {
      if (levels[i].size() >= d + 1) {
        level = i;
        break;
      }
    }
    if (level == levels.size()) {
      throw std::runtime_error("find_perfect: no level holds d+1 sets; too few classes");
    }

    std::vector<ColorfulChoice> inputs;
    std::vector<std::size_t> consumed;
    for (std::size_t t = 0; t <= d; ++t) {
      for (const auto& r : levels[level].front()) consumed.push_back(r.color);
      inputs.push_back(make_choice(std::move(levels[level].front())));
      levels[level].pop_front();
    }
    const auto combined = combine_halve(instance, inputs);
    ++result.combinations;
    auto kept = prune_refs(instance, combined.selections);
    auto choice = make_choice(kept);
    if (choice.m == 1) {
      result.choice = std::move(choice);
      return result;
    }

    const std::size_t target = level + 1;
    const std::size_t guarantee = level_guarantee(d, target);
    if (choice.m > guarantee) {
      throw std::logic_error("find_perfect: stored set exceeds its level guarantee");
    }
    if (levels.size() <= target) levels.resize(target + 1);
    levels[target].push_back(choice.selections);
    result.stores.push_back({target, choice.m, guarantee});

    std::sort(consumed.begin(), consumed.end());
    consumed.erase(std::unique(consumed.begin(), consumed.end()), consumed.end());
    const auto counts = color_counts(choice.selections, instance.num_classes());
    for (auto color : consumed) {
      if (counts[color] != 0) continue;
      ++result.returned_colors;
      if (push_class(color)) return result;
    }
  }
}

}  // namespace colorful
