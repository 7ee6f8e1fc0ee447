#pragma once

// Umbrella header.

#include "svineq/constructions.hpp"
#include "svineq/eig.hpp"
#include "svineq/errors.hpp"
#include "svineq/falsify.hpp"
#include "svineq/generators.hpp"
#include "svineq/harness.hpp"
#include "svineq/inequalities.hpp"
#include "svineq/io.hpp"
#include "svineq/matrix.hpp"
#include "svineq/registry.hpp"
#include "svineq/spectral.hpp"
#include "svineq/spectrum.hpp"
#include "svineq/svd.hpp"
#include "svineq/tolerances.hpp"
