#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "c3rigid/certify.hpp"
#include "c3rigid/frame.hpp"
#include "c3rigid/qsqrt3.hpp"
#include "c3rigid/realization.hpp"
#include "c3rigid/sparsity.hpp"
#include "c3rigid/tree_partition.hpp"

namespace c3rigid {

inline constexpr std::string_view kVersion = "0.1.0";

/// FNV-1a 64-bit hash of the raw input, as 16 lowercase hex digits.
std::string input_digest(std::string_view document);

/// {"command", "version", "input_digest"}; callers append their sections.
nlohmann::json report_header(std::string_view command, std::string_view document);

/// {"a": "p/q", "b": "r/s", "approx": double}; approx is a display value only.
nlohmann::json to_json(const QSqrt3& x);
QSqrt3 qsqrt3_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Point2& p);
nlohmann::json points_to_json(std::span<const Point2> points);

nlohmann::json to_json(const SparsityReport& r);
nlohmann::json to_json(const FixedCounts& c);
nlohmann::json to_json(const C3Verdict& v);
nlohmann::json to_json(const Move& m);
Move move_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConstructionSequence& seq);
nlohmann::json to_json(const ReplayResult& r);
nlohmann::json to_json(const TreePartition& tp);
TreePartition partition_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PartitionReport& r);
nlohmann::json to_json(const Placement& p);
nlohmann::json to_json(const IsostaticVerdict& v);
nlohmann::json to_json(const Frame& f);
nlohmann::json to_json(const PullApartRound& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace c3rigid
