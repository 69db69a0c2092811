#pragma once

// Umbrella header.

#include "gluing/composition.hpp"
#include "gluing/exact_int.hpp"
#include "gluing/families.hpp"
#include "gluing/generating.hpp"
#include "gluing/genus_table.hpp"
#include "gluing/involutions.hpp"
#include "gluing/marked_map.hpp"
#include "gluing/multiplicity.hpp"
#include "gluing/oracle.hpp"
#include "gluing/permutation.hpp"
#include "gluing/polynomial.hpp"
#include "gluing/power_series.hpp"
#include "gluing/recurrences.hpp"
#include "gluing/surgery.hpp"
#include "gluing/verify.hpp"
