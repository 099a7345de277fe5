#pragma once

#include <cstdint>
#include <string>

#include "selfsim/machine.hpp"
#include "selfsim/padic.hpp"
#include "selfsim/rng.hpp"

namespace selfsim {

// Random element as a short product of generators and their inverses.
Elem random_element(const Machine& m, Rng& rng, unsigned max_syms = 6);

// Rejection-sampled element of the subgroup.
Elem random_subgroup_element(const Machine& m, Rng& rng, unsigned max_syms = 6);

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Every randomized suite derives trial i from seed + i, so runs are
// reproducible from the seed alone.

SuiteResult suite_digits_roundtrip(const Eta& eta, unsigned trials, unsigned depth,
                                   std::uint64_t seed);
SuiteResult suite_action_axioms(const Machine& m, unsigned trials, unsigned depth,
                                std::uint64_t seed);
SuiteResult suite_corefree(const Machine& m, unsigned max_len, unsigned depth);
SuiteResult suite_transitivity(const Machine& m, unsigned depth);
SuiteResult suite_intertwining(const Eta& eta, unsigned trials, std::uint64_t seed);
SuiteResult suite_boundary(const Eta& eta, unsigned trials, unsigned depth,
                           std::uint64_t seed);
SuiteResult suite_block_chi(unsigned trials, std::uint64_t seed);
SuiteResult suite_abelian_portraits(const Machine& m, unsigned trials, unsigned depth,
                                    std::uint64_t seed);

}  // namespace selfsim
