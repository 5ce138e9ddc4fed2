#pragma once

// Umbrella header for the lcif library: exact enumeration of maximal
// left-compressed intersecting families of r-sets via generating sets,
// exact hit counting against a fixed set X, and goodness classification.

#include "lcif/setcore.hpp"
#include "lcif/bigint.hpp"
#include "lcif/antichain.hpp"
#include "lcif/family.hpp"
#include "lcif/census.hpp"
#include "lcif/mlcif.hpp"
#include "lcif/goodness.hpp"
#include "lcif/verify.hpp"
