#pragma once

// Umbrella header for the whole library.

#include "minpres/bruhat.hpp"
#include "minpres/errors.hpp"
#include "minpres/linalg.hpp"
#include "minpres/littlewood_richardson.hpp"
#include "minpres/numeric.hpp"
#include "minpres/parallel.hpp"
#include "minpres/partition.hpp"
#include "minpres/presentation.hpp"
#include "minpres/schur.hpp"
