#pragma once

#include <optional>
#include <string>

#include "domseq/family.hpp"

namespace domseq {

struct Prediction {
    long long value = 0;
    std::string formula;  // human-readable closed form
};

// Closed-form value for (family shape, invariant) when one is known and its
// validity conditions hold for the given sizes; nullopt otherwise. All
// variables must be bound.
std::optional<Prediction> predicted_value(const FamilySpec& spec, const std::string& invariant,
                                          const Bindings& bindings = {});

}  // namespace domseq
