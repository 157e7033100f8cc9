#include "monosep/json_io.hpp"

namespace monosep {

using nlohmann::json;

json to_json(const VertexSet& s) { return json(s.to_vector()); }

json to_json(const HullTrace& trace) {
    json steps = json::array();
    for (const HullStep& step : trace.steps) {
        steps.push_back({{"component", to_json(step.component)},
                         {"pair", {step.pair.first, step.pair.second}},
                         {"added", to_json(step.added)}});
    }
    return steps;
}

json to_json(const SeparationResult& result) {
    json out;
    out["separable"] = result.separable;
    out["witness"] = result.witness ? to_json(*result.witness) : json(nullptr);

    json comps = json::array();
    for (const ComponentTrace& trace : result.components) {
        json candidates = json::array();
        for (const CandidateTrace& c : trace.candidates) {
            candidates.push_back(
                {{"i", c.index}, {"outcome", to_string(c.outcome)}, {"rounds", c.rounds}});
        }
        comps.push_back({{"component", trace.component},
                         {"path", trace.path},
                         {"candidates", candidates},
                         {"chosen_i", trace.chosen_index >= 0 ? json(trace.chosen_index) : json(nullptr)},
                         {"failure", trace.failure.empty() ? json(nullptr) : json(trace.failure)}});
    }
    out["trace"] = {{"components", comps},
                    {"reason", result.reason.empty() ? json(nullptr) : json(result.reason)}};
    return out;
}

}  // namespace monosep
