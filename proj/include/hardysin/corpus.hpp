#pragma once

// Test-function corpus: named analytic families with parameters, read from a
// JSON data file (see data/hardy_corpus.json).

#include <map>
#include <string>
#include <vector>

#include "hardysin/variational.hpp"

namespace hardysin::corpus {

using Params = std::map<std::string, double>;

// Families: sine {k}, poly {a, b}, sine_power {e}, bump {center, width},
// sqrt_log {} (x^{1/2} / ln(1/x), meaningful on (0, 1) only).
TestFunction make(const std::string& family, const Params& params, const std::string& name);

std::string default_path();

// Throws DomainError on unreadable files, unknown families or missing parameters.
std::vector<TestFunction> load(const std::string& path = default_path());

}  // namespace hardysin::corpus
