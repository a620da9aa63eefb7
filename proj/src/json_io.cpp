#include "gtpac/json_io.hpp"

#include <ostream>

#include "gtpac/errors.hpp"

namespace gtpac {

using nlohmann::json;

json to_json(const GroundTruth& gt) {
    return json{{"n", gt.n}, {"defectives", gt.defectives}};
}

GroundTruth ground_truth_from_json(const json& j) {
    GroundTruth gt;
    gt.n = j.at("n").get<long long>();
    gt.defectives = j.at("defectives").get<std::vector<long long>>();
    return gt;
}

json to_json(const DesignSpec& design) {
    if (const auto* b = std::get_if<BernoulliDesign>(&design))
        return json{{"bernoulli", {{"p", b->p}}}};
    return json{{"row_weight", {{"s", std::get<RowWeightDesign>(design).s}}}};
}

DesignSpec design_from_json(const json& j) {
    if (j.contains("bernoulli")) return BernoulliDesign{j.at("bernoulli").at("p").get<double>()};
    if (j.contains("row_weight"))
        return RowWeightDesign{j.at("row_weight").at("s").get<long long>()};
    throw InvalidParameter("design", "expected a 'bernoulli' or 'row_weight' object");
}

json to_json(const PacTarget& target) {
    return json{{"epsilon", target.epsilon}, {"delta", target.delta}};
}

PacTarget pac_target_from_json(const json& j) {
    return PacTarget{j.at("epsilon").get<double>(), j.at("delta").get<double>()};
}

json to_json(const ErrorBudget& budget) {
    return json{{"kind", to_string(budget.kind)}, {"count", budget.count}};
}

ErrorBudget error_budget_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "fp" && kind != "fn")
        throw InvalidParameter("budget.kind", "expected 'fp' or 'fn'");
    return ErrorBudget{kind == "fp" ? BudgetKind::FalsePositive : BudgetKind::FalseNegative,
                       j.at("count").get<long long>()};
}

json to_json(const DecodeResult& result) {
    return json{{"estimate", result.estimate}, {"fp", result.fp}, {"fn", result.fn}};
}

DecodeResult decode_result_from_json(const json& j) {
    DecodeResult result;
    result.estimate = j.at("estimate").get<std::vector<long long>>();
    result.fp = j.at("fp").get<long long>();
    result.fn = j.at("fn").get<long long>();
    return result;
}

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

std::string row_to_hex(const PoolingMatrix& matrix, long long i) {
    // Little-endian bytes: item j lives in bit (j % 8) of byte (j / 8).
    const long long bytes = (matrix.items() + 7) / 8;
    std::string hex(static_cast<std::size_t>(bytes) * 2, '0');
    auto words = matrix.row_words(i);
    for (long long b = 0; b < bytes; ++b) {
        const unsigned byte =
            static_cast<unsigned>((words[static_cast<std::size_t>(b >> 3)] >> ((b & 7) * 8)) & 0xFF);
        hex[static_cast<std::size_t>(b) * 2] = kHexDigits[byte >> 4];
        hex[static_cast<std::size_t>(b) * 2 + 1] = kHexDigits[byte & 0xF];
    }
    return hex;
}

unsigned hex_nibble(char c) {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw InvalidParameter("rows_hex", "invalid hex digit");
}

}  // namespace

json to_json(const PoolingMatrix& matrix) {
    std::vector<std::string> rows;
    rows.reserve(static_cast<std::size_t>(matrix.tests()));
    for (long long i = 0; i < matrix.tests(); ++i) rows.push_back(row_to_hex(matrix, i));
    return json{{"m", matrix.tests()}, {"n", matrix.items()}, {"rows_hex", rows}};
}

PoolingMatrix pooling_matrix_from_json(const json& j) {
    const long long m = j.at("m").get<long long>();
    const long long n = j.at("n").get<long long>();
    const auto rows = j.at("rows_hex").get<std::vector<std::string>>();
    if (static_cast<long long>(rows.size()) != m)
        throw InvalidParameter("rows_hex", "row count does not match m");
    PoolingMatrix matrix(m, n);
    const std::size_t expected_len = static_cast<std::size_t>((n + 7) / 8) * 2;
    for (long long i = 0; i < m; ++i) {
        const std::string& hex = rows[static_cast<std::size_t>(i)];
        if (hex.size() != expected_len)
            throw InvalidParameter("rows_hex", "row width does not match n");
        for (long long j_item = 0; j_item < n; ++j_item) {
            const std::size_t byte_index = static_cast<std::size_t>(j_item / 8);
            const unsigned byte = (hex_nibble(hex[byte_index * 2]) << 4) |
                                  hex_nibble(hex[byte_index * 2 + 1]);
            if ((byte >> (j_item % 8)) & 1U) matrix.set(i, j_item);
        }
    }
    return matrix;
}

json to_json(const BoundResult& result) {
    json j{{"n", result.n},
           {"m_s", result.m_s},
           {"rho", result.testing_rate()},
           {"budget", to_json(result.budget)},
           {"saturated", result.saturated}};
    json inter = json::object();
    for (const auto& [name, value] : result.intermediates) inter[name] = value;
    j["intermediates"] = inter;
    return j;
}

void write_matrix_csv(std::ostream& out, const PoolingMatrix& matrix) {
    for (long long j = 0; j < matrix.items(); ++j) {
        if (j) out << ',';
        out << "item_" << j;
    }
    out << '\n';
    for (long long i = 0; i < matrix.tests(); ++i) {
        for (long long j = 0; j < matrix.items(); ++j) {
            if (j) out << ',';
            out << (matrix.get(i, j) ? '1' : '0');
        }
        out << '\n';
    }
}

}  // namespace gtpac
