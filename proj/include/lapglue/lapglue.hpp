#pragma once

#include "lapglue/bigint.hpp"
#include "lapglue/charpoly.hpp"
#include "lapglue/error.hpp"
#include "lapglue/evolution.hpp"
#include "lapglue/graph.hpp"
#include "lapglue/io.hpp"
#include "lapglue/laplacian.hpp"
#include "lapglue/matrix.hpp"
#include "lapglue/polynomial.hpp"
#include "lapglue/sampling.hpp"
#include "lapglue/selfcheck.hpp"
#include "lapglue/spectra.hpp"
