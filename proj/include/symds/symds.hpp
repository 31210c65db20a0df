#pragma once

// Umbrella header: the whole library in one include.

#include "symds/decompose.hpp"
#include "symds/dsm_io.hpp"
#include "symds/extremality.hpp"
#include "symds/graphs.hpp"
#include "symds/latin.hpp"
#include "symds/linalg.hpp"
#include "symds/matching.hpp"
#include "symds/matrix.hpp"
#include "symds/perm_classes.hpp"
#include "symds/permutation.hpp"
#include "symds/rational.hpp"
#include "symds/reproduce.hpp"
#include "symds/spans.hpp"
#include "symds/term_rank.hpp"
