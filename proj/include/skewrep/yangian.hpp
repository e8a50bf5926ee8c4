#pragma once

#include "skewrep/yangian/lweight.hpp"
#include "skewrep/yangian/currents.hpp"
#include "skewrep/yangian/oracle.hpp"
#include "skewrep/yangian/relations.hpp"
#include "skewrep/yangian/structure.hpp"
