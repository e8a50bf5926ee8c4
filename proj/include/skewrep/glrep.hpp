#pragma once

#include "skewrep/glrep/matrix_element.hpp"
#include "skewrep/glrep/generators.hpp"
