#pragma once

#include <json.hpp>

#include "gtpac/decoders.hpp"
#include "gtpac/types.hpp"

namespace gtpac {

// JSON wire formats:
//   GroundTruth  {"n":int,"defectives":[int]}
//   DesignSpec   {"bernoulli":{"p":float}} | {"row_weight":{"s":int}}
//   PacTarget    {"epsilon":float,"delta":float}
//   DecodeResult {"estimate":[int],"fp":int,"fn":int}
//   PoolingMatrix {"m":int,"n":int,"rows_hex":[str]}  (row bits as little-endian bytes)

nlohmann::json to_json(const GroundTruth& gt);
GroundTruth ground_truth_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DesignSpec& design);
DesignSpec design_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PacTarget& target);
PacTarget pac_target_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ErrorBudget& budget);
ErrorBudget error_budget_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DecodeResult& result);
DecodeResult decode_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PoolingMatrix& matrix);
PoolingMatrix pooling_matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundResult& result);

/// 0/1 CSV with header item_0..item_{n-1}, one row per test.
void write_matrix_csv(std::ostream& out, const PoolingMatrix& matrix);

}  // namespace gtpac
