#pragma once

// Umbrella header for the exact Poisson-geometry verification library.

#include "pgcheck/bialgebra.hpp"
#include "pgcheck/chevalley.hpp"
#include "pgcheck/dynamical.hpp"
#include "pgcheck/kdiff.hpp"
#include "pgcheck/lie.hpp"
#include "pgcheck/manin.hpp"
#include "pgcheck/matgroup.hpp"
#include "pgcheck/matrix.hpp"
#include "pgcheck/multivector.hpp"
#include "pgcheck/nijenhuis.hpp"
#include "pgcheck/parse.hpp"
#include "pgcheck/poly.hpp"
#include "pgcheck/polyfield.hpp"
#include "pgcheck/ratfunc.hpp"
#include "pgcheck/report.hpp"
#include "pgcheck/rng.hpp"
#include "pgcheck/scalar.hpp"
