// Runs the end-to-end verification suite; the exit code is the number of
// failed criteria, so a clean run exits 0.
#include <iostream>

#include "lsa/acceptance.hpp"

int main() { return lsa::run_acceptance(std::cout); }
