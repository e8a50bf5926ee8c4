#pragma once

#include "skewrep/tableaux/partition.hpp"
#include "skewrep/tableaux/ssyt.hpp"
#include "skewrep/tableaux/shape.hpp"
#include "skewrep/tableaux/gt_tableau.hpp"
#include "skewrep/tableaux/enumerate.hpp"
#include "skewrep/tableaux/bijection.hpp"
#include "skewrep/tableaux/graph.hpp"
