#pragma once

// Exact computation with finite matroids: intersections with corank-1
// matroids realized as duals of Rado matroids, Bergman fans and their stable
// intersections with tropical hyperplanes, and the simplicial-generator
// layer of the Chow ring (monomial bases, nested quotients, the
// Dragon-Hall-Rado degree criterion).

#include "corado/bergman.hpp"
#include "corado/bits.hpp"
#include "corado/chow.hpp"
#include "corado/enumerate.hpp"
#include "corado/error.hpp"
#include "corado/ground.hpp"
#include "corado/json_io.hpp"
#include "corado/matroid.hpp"
#include "corado/ops.hpp"
#include "corado/rado.hpp"
#include "corado/verify.hpp"
