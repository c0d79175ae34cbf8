#pragma once

// Umbrella header.

#include "corpus.hpp"      // IWYU pragma: export
#include "errors.hpp"      // IWYU pragma: export
#include "free_trees.hpp"  // IWYU pragma: export
#include "graph.hpp"       // IWYU pragma: export
#include "labeling.hpp"    // IWYU pragma: export
#include "matrix.hpp"      // IWYU pragma: export
#include "mu_permanent.hpp"  // IWYU pragma: export
#include "permutation.hpp"   // IWYU pragma: export
#include "polynomial.hpp"    // IWYU pragma: export
#include "rational.hpp"      // IWYU pragma: export
#include "sequence.hpp"      // IWYU pragma: export
#include "tree_identities.hpp"  // IWYU pragma: export
#include "verify.hpp"           // IWYU pragma: export
