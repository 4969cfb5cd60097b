/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QTOM_EXAMPLES_HPP
#define QTOM_EXAMPLES_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "qtom/separability.hpp"

namespace qtom {

struct ExampleResult {
    std::string name;
    bool pass = false;
    std::string detail;
    // probe parameter vs witness value, filled by the curve-shaped items
    std::vector<std::pair<double, double>> curve;
};

/// Names of the bundled closed-form checks: werner-boundary,
/// werner-closed-form, qutrit3, qutrit2, octahedron.
std::vector<std::string> example_names();

/// Runs the bundled example suite (optionally a single named item).
/// Each item checks one family of closed-form values against the library.
std::vector<ExampleResult> run_example_suite(const std::string& filter = "",
                                             std::uint64_t seed = 1);

/// Writes the bundled example state files (Werner family, two-qutrit pairs)
/// into dir, generated by the library itself.
std::vector<std::filesystem::path> write_example_states(
    const std::filesystem::path& dir);

}  // namespace qtom

#endif
