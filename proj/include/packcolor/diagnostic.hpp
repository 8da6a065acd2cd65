#pragma once

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace packcolor {

/// Raised when the coloring engine reaches a state its move catalog cannot
/// resolve, or when an internal invariant fails. Carries a JSON dump of the
/// state for post-mortem; the engine never emits an unverified coloring.
class Diagnostic : public std::runtime_error {
public:
    Diagnostic(const std::string& what, nlohmann::json dump)
        : std::runtime_error(what), dump_(std::move(dump)) {}

    const nlohmann::json& dump() const { return dump_; }

private:
    nlohmann::json dump_;
};

}  // namespace packcolor
