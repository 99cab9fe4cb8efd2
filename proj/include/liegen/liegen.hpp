#pragma once

// Umbrella header.

#include "liegen/catalog.hpp"
#include "liegen/coadjoint.hpp"
#include "liegen/form.hpp"
#include "liegen/genproduct.hpp"
#include "liegen/io.hpp"
#include "liegen/lie_algebra.hpp"
#include "liegen/matrix.hpp"
#include "liegen/poly_matrix.hpp"
#include "liegen/polynomial.hpp"
#include "liegen/prng.hpp"
#include "liegen/prodstruct.hpp"
#include "liegen/rational.hpp"
#include "liegen/reports.hpp"
