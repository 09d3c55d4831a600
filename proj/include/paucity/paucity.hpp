#pragma once

#include "paucity/canonical_product.hpp"
#include "paucity/contrast.hpp"
#include "paucity/counting.hpp"
#include "paucity/diagonal.hpp"
#include "paucity/errors.hpp"
#include "paucity/exponent_fit.hpp"
#include "paucity/minimal_polynomial.hpp"
#include "paucity/multiset.hpp"
#include "paucity/polynomial.hpp"
#include "paucity/report_io.hpp"
#include "paucity/shift.hpp"
#include "paucity/solution_pair.hpp"
#include "paucity/verifier.hpp"
