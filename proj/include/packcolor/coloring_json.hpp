#pragma once

#include "packcolor/packing.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace packcolor {

/// {"sequence": [s_1, ...], "classes": {"<vertex>": class, ...}}
inline nlohmann::json coloring_to_json(const SColoring& f) {
    nlohmann::json classes = nlohmann::json::object();
    for (std::size_t v = 0; v < f.classes.size(); ++v)
        classes[std::to_string(v)] = f.classes[v];
    return {{"sequence", f.seq.values()}, {"classes", std::move(classes)}};
}

/// Inverse of coloring_to_json. Vertex keys must cover 0..n-1 exactly.
inline SColoring coloring_from_json(const nlohmann::json& j, std::size_t n) {
    if (!j.is_object() || !j.contains("sequence") || !j.contains("classes"))
        throw std::invalid_argument("coloring JSON needs 'sequence' and 'classes'");
    SColoring f{PackingSequence(j.at("sequence").get<std::vector<unsigned>>()), std::vector<unsigned>(n, 0)};
    const auto& classes = j.at("classes");
    if (!classes.is_object())
        throw std::invalid_argument("coloring JSON: 'classes' must be an object");
    for (auto it = classes.begin(); it != classes.end(); ++it) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(it.key(), &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != it.key().size() || it.key().empty())
            throw std::invalid_argument("coloring JSON: bad vertex key '" + it.key() + "'");
        if (v >= n)
            throw std::invalid_argument("coloring JSON: vertex " + it.key() + " out of range");
        f.classes[v] = it.value().get<unsigned>();
    }
    f.check_total(n);
    return f;
}

inline nlohmann::json report_to_json(const ViolationReport& r) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : r.violations)
        list.push_back({{"class", v.cls}, {"u", v.u}, {"v", v.v}, {"distance", v.distance}, {"required", v.required}});
    return {{"valid", r.ok()}, {"violations", std::move(list)}};
}

}  // namespace packcolor
