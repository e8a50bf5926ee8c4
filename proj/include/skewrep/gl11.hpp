#pragma once

#include "skewrep/gl11/rtt.hpp"
#include "skewrep/gl11/analysis.hpp"
