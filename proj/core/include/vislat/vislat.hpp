#pragma once

#include "vislat/congruence.hpp"
#include "vislat/density.hpp"
#include "vislat/error.hpp"
#include "vislat/f11_analysis.hpp"
#include "vislat/parallel.hpp"
#include "vislat/poly.hpp"
#include "vislat/primes.hpp"
#include "vislat/visibility.hpp"
#include "vislat/wide_int.hpp"
