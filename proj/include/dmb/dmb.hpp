#pragma once

#include "dmb/bott.hpp"
#include "dmb/complex.hpp"
#include "dmb/error.hpp"
#include "dmb/function.hpp"
#include "dmb/gradient.hpp"
#include "dmb/homology.hpp"
#include "dmb/inequalities.hpp"
#include "dmb/io.hpp"
#include "dmb/morse.hpp"
#include "dmb/polynomial.hpp"
#include "dmb/rational.hpp"
