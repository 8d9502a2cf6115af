#pragma once

#include "orbicurve/companion.hpp"
#include "orbicurve/dominance.hpp"
#include "orbicurve/errors.hpp"
#include "orbicurve/k0.hpp"
#include "orbicurve/perm_group.hpp"
#include "orbicurve/permutation.hpp"
#include "orbicurve/presentation.hpp"
#include "orbicurve/rational.hpp"
#include "orbicurve/version.hpp"
#include "orbicurve/weighted_curve.hpp"
#include "orbicurve/witness.hpp"
