#pragma once

#include "skewrep/exactmath/rational.hpp"
#include "skewrep/exactmath/polynomial.hpp"
#include "skewrep/exactmath/rational_function.hpp"
#include "skewrep/exactmath/series.hpp"
#include "skewrep/exactmath/matrix.hpp"
#include "skewrep/exactmath/qfield.hpp"
