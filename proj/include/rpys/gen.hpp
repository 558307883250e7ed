#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rpys/util.hpp"
#include "rpys/wos.hpp"

namespace rpys {

/// A historical work injected into a synthetic corpus. `weight` is the
/// mixture rate of this work relative to a unit of background references,
/// so on average a fraction weight / (1 + sum of weights) of all references
/// cite it.
struct Classic {
    int rpy = 1900;
    double weight = 1.0;
    std::string cr;  // canonical cited-reference string

    friend bool operator==(const Classic&, const Classic&) = default;
};

/// Everything that determines a generated corpus; the seed fixes the output
/// byte for byte.
struct GenSpec {
    std::size_t n_records = 100;
    YearWindow citing_years{1982, 2012};
    int refs_min = 10;  // references per record, uniform in [refs_min, refs_max]
    int refs_max = 40;
    int age_peak = 3;         // most common reference age, years
    double age_decay = 0.25;  // geometric tail rate in (0, 1]
    std::vector<Classic> classics;
    double incomplete_rate = 0.05;  // chance a classic loses its V/P tokens
    std::uint64_t seed = 1;

    friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Generates a corpus whose background reference ages follow
/// age_peak + geometric(age_decay) and whose classics appear by weight.
/// Deterministic given the seed. Throws std::invalid_argument on an invalid
/// spec (empty citing range, refs_min > refs_max, rates out of range,
/// non-positive classic weight).
Corpus generate(const GenSpec& spec);

}  // namespace rpys
