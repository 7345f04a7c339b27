#pragma once

// Umbrella header.

#include "alpha.hpp"
#include "charsum.hpp"
#include "constants.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "fourier.hpp"
#include "moments.hpp"
#include "montecarlo.hpp"
#include "parallel.hpp"
#include "philox.hpp"
#include "primes.hpp"
#include "sample.hpp"
#include "series.hpp"
#include "tails.hpp"
#include "trig.hpp"
