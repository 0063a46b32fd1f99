#pragma once

#include "virtstring/based_matrix.hpp"
#include "virtstring/linalg.hpp"
#include "virtstring/polynomial.hpp"
#include "virtstring/string_core.hpp"
#include "virtstring/u_poly.hpp"
#include "virtstring/filling.hpp"
#include "virtstring/homotopy.hpp"
#include "virtstring/parallel.hpp"
#include "virtstring/lie.hpp"
#include "virtstring/skein.hpp"
