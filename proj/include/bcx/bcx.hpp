#pragma once

// Umbrella header: the whole bicomplex linear-algebra library.

#include "bcx/error.hpp"
#include "bcx/scalar.hpp"
#include "bcx/complex_matrix.hpp"
#include "bcx/elimination.hpp"
#include "bcx/bicomplex.hpp"
#include "bcx/bicomplex_matrix.hpp"
#include "bcx/rank.hpp"
#include "bcx/linsys.hpp"
#include "bcx/parse.hpp"
#include "bcx/format.hpp"
