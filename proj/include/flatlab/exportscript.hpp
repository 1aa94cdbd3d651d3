#pragma once

#include "flatlab/dsl.hpp"

namespace flatlab {

/// Script for an external computer-algebra system recomputing the fiber
/// dimensions and the Tor_1 dimension (or the Hilbert rows in the graded
/// case), with the values this tool computed embedded as comments.
/// Dialects: "m2" (Macaulay2) and "singular". Throws Error on constructs a
/// dialect cannot express.
std::string export_crosscheck(const ProblemFile& pf, const std::string& dialect);

} // namespace flatlab
