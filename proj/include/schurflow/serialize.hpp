#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "schurflow/gaussian.hpp"
#include "schurflow/kernels.hpp"
#include "schurflow/operators.hpp"
#include "schurflow/partition.hpp"
#include "schurflow/space.hpp"

namespace schurflow {

using Json = nlohmann::json;

// Space + embedding descriptor:
// {"weights": [...], "labels": [...], "embedding": {"dim": d, "points": [[...], ...]}}
Json space_to_json(const FiniteSpace& sp, const Embedding* emb = nullptr);
std::pair<SpacePtr, std::optional<Embedding>> space_from_json(const Json& j);

// Kernels serialize as n x n arrays; complex entries as [re, im] pairs, real
// kernels as plain numbers. Both shapes are accepted on input.
Json kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const Json& j, SpacePtr space);

// {"space": {...}, "kernel": [[...], ...]}
Json operator_to_json(const HSOperator& f);
HSOperator operator_from_json(const Json& j);

// {"blocks": [[indices], ...]} (0-based atom indices)
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j, SpacePtr space);

Json pathconfig_to_json(const PathConfig& cfg);
PathConfig pathconfig_from_json(const Json& j);

}  // namespace schurflow
