#include "result.hpp"

namespace dc::cli {

std::string write_result(const RunResult& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    if (!r.input.empty()) j["input"] = r.input;
    j["verdict"] = r.verdict;
    if (r.detail) j["detail"] = *r.detail;
    if (r.colors) {
        nlohmann::ordered_json colors;
        for (size_t v = 0; v < r.colors->size(); ++v)
            colors[std::to_string(v + 1)] = (*r.colors)[v];
        j["colors"] = std::move(colors);
    }
    if (r.order) {
        nlohmann::ordered_json order = nlohmann::ordered_json::array();
        for (int v : *r.order) order.push_back(v + 1);
        j["order"] = std::move(order);
    }
    if (r.witness) {
        nlohmann::ordered_json witness = nlohmann::ordered_json::array();
        for (int v : *r.witness) witness.push_back(v + 1);
        j["witness"] = std::move(witness);
    }
    if (r.report) j["report"] = *r.report;
    for (const auto& [key, value] : r.extra) j[key] = value;
    j["timing_ms"] = r.timing_ms;
    if (r.seed) j["seed"] = *r.seed;
    return j.dump();
}

int exit_code_for_verdict(const std::string& verdict) {
    static const char* positive[] = {"colorable", "dually_chordal", "holds",
                                     "generated", "reduced",        "ok"};
    for (const char* v : positive)
        if (verdict == v) return 0;
    return 1;
}

} // namespace dc::cli
