#pragma once

#include <cstdint>
#include <json.hpp>
#include <random>
#include <string>

#include "moduli/bicolored.hpp"

namespace moduli {

// Seeded random source for strata trees and operad elements. Draws use raw
// engine output so sampled values are stable across standard libraries.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi);  // inclusive
    Rational small_rational();    // nonzero, small numerator/denominator

    ComplexStableTree complex_tree(int leaves);
    // r real points and p pairs with r + 2p >= 3; r = 1 is rejected upstream
    // by the operad layer but is a fine tree.
    RealStableTree real_tree(int r, int p, int depth = 2);

    StrataSum complex_element(int arity);
    StrataSum real_element(int k, int l);
    StrataSum conjugate_element(int arity);
    BicoloredElement bicolored_element(int arity, Color out);

private:
    std::mt19937_64 rng_;
};

// One randomized identity sweep. Identities: "114a", "114b", "units",
// "expandcomp" (simultaneous vs iterated composition, both ways of
// iterating). Samples are stratified across the feasible color patterns.
struct SweepReport {
    std::string identity;
    int samples = 0;
    std::uint64_t seed = 0;
    int max_arity = 5;
    nlohmann::json failures = nlohmann::json::array();

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

SweepReport run_axiom_sweep(const std::string& identity, int samples, std::uint64_t seed,
                            int max_arity = 5);

}  // namespace moduli
