#pragma once

#include <span>
#include <string>

#include "c3rigid/graph.hpp"
#include "c3rigid/qsqrt3.hpp"
#include "c3rigid/tree_partition.hpp"

namespace c3rigid::cli {

inline constexpr double kCanvas = 800.0;
inline constexpr double kMargin = 0.05;

/// Joints as circles, bars as lines. With a partition, each bar carries the
/// class t0 (thick), t1 (dashed) or t2 (thin); otherwise "bar". Uses the
/// floating view of the positions only.
std::string render_svg(const Graph& g, std::span<const Point2> positions, const TreePartition* partition);

}  // namespace c3rigid::cli
