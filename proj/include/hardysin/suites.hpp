#pragma once

// Named invariant suites run by `hardysin verify`.

#include <map>
#include <string>
#include <vector>

namespace hardysin::suites {

struct Assertion {
    std::string suite;
    std::string invariant;
    double value = 0.0;
    std::string relation;  // one of <, <=, >, >=
    double threshold = 0.0;
    bool passed = false;
};

struct SuiteResult {
    std::string name;
    std::vector<Assertion> assertions;
    double seconds = 0.0;

    bool passed() const;
};

using Tolerances = std::map<std::string, double>;

// Defaults for every tolerance key; `verify --tol-<key>` overrides.
Tolerances default_tolerances();

// specfun, closedform, spectral, hardy, identities.
const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown suite or tolerance key.
SuiteResult run(const std::string& name, const Tolerances& tol = default_tolerances());

// Runs the named suites concurrently; results follow the order of `names`.
std::vector<SuiteResult> run_many(const std::vector<std::string>& names,
                                  const Tolerances& tol = default_tolerances());

}  // namespace hardysin::suites
