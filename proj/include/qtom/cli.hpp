/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QTOM_CLI_HPP
#define QTOM_CLI_HPP

#include <iostream>

namespace qtom::cli {

/// Entry point of the qtom command-line tool. Exit codes: 0 success or
/// separable-consistent verdict, 1 input error, 2 usage error, 3 entangled
/// verdict. Streams are injectable for in-process testing.
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace qtom::cli

#endif
