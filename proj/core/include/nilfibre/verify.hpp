#pragma once

/*
  The property suite run per composition: enumeration, the reverse build,
  covering and rank certificates, vanishing and non-vanishing of the
  invariants.  Drives the `verify` subcommand and the acceptance tests.
*/

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilfibre/component.hpp"
#include "nilfibre/geometry.hpp"
#include "nilfibre/invariant.hpp"
#include "nilfibre/reverse.hpp"

namespace nilfibre {

struct SuiteOptions {
    int zero_trials = 3;
    std::uint64_t seed = 42;              // overridable via flag or NILFIBRE_SEED
    int symbolic_bound = kDefaultSymbolicBound;
    bool symbolic_cross_check = false;    // compare blackbox vanishing with full restriction
    bool reverse_enumeration = true;      // vanish every leaf of the induced sequence
    bool weierstrass = true;
    bool tangent = true;
    bool trapezium_walk = true;           // non-vanishing certificates along Psi
    bool degree_check = true;             // symbolic degree against the left rectangle
    std::optional<RedSet> only_red_set;   // restrict the per-component checks
};

struct CheckLine {
    std::string composition;
    std::string subject;  // usually the Red Set
    std::string check;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<CheckLine> lines;
    bool all_pass = true;
    int checks_run = 0;
    int failures = 0;

    void add(std::string composition, std::string subject, std::string check, bool pass, std::string detail = "");
    void merge(const SuiteResult& other);
};

SuiteResult verify_composition(const Composition& comp, const SuiteOptions& opt);
SuiteResult verify_all_up_to(int max_n, const SuiteOptions& opt);

}  // namespace nilfibre
