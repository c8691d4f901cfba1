#pragma once

#include "lk/comb.hpp"
#include "lk/error.hpp"
#include "lk/exact.hpp"
#include "lk/index.hpp"
#include "lk/matrix.hpp"
#include "lk/pipeline.hpp"
#include "lk/poly.hpp"
#include "lk/qu.hpp"
#include "lk/tracepoly.hpp"
