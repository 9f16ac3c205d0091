#pragma once

#include "lochom/error.hpp"
#include "lochom/simplex.hpp"
#include "lochom/complex.hpp"
#include "lochom/exact_linalg.hpp"
#include "lochom/homology.hpp"
#include "lochom/graph.hpp"
#include "lochom/invariants.hpp"
#include "lochom/local_analysis.hpp"
#include "lochom/parallel.hpp"
#include "lochom/io.hpp"
#include "lochom/datasets.hpp"
#include "lochom/stats.hpp"
