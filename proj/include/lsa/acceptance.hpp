#pragma once

#include <iosfwd>

namespace lsa {

/// Runs the end-to-end verification suite: ten numbered criteria covering the
/// catalog algebras, the cochain complex, differential forms, universal central
/// extensions, matrix algebras, free objects, and the loop bracket tables.
/// Prints one PASS/FAIL line per criterion (details indented under failures)
/// plus a summary line, and returns the number of failed criteria.
int run_acceptance(std::ostream& out);

}  // namespace lsa
