#pragma once

#include "skewrep/qaffine/generators.hpp"
#include "skewrep/qaffine/currents.hpp"
#include "skewrep/qaffine/relations.hpp"
#include "skewrep/qaffine/oracle.hpp"
#include "skewrep/qaffine/rmatrix.hpp"
