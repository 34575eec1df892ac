#pragma once

#include "bounds.hpp"
#include "complex.hpp"
#include "composite.hpp"
#include "counting.hpp"
#include "curve.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "models.hpp"
#include "obstruction.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "semigroup.hpp"
#include "snf.hpp"
#include "staircase.hpp"
