#pragma once

// Umbrella header. json_io.hpp (nlohmann-based serialization) is separate.

#include "asymptotic.hpp"
#include "error.hpp"
#include "exponent_vector.hpp"
#include "io.hpp"
#include "monomial_ideal.hpp"
#include "multiplier.hpp"
#include "newton_polytope.hpp"
#include "rational.hpp"
#include "theorems.hpp"
#include "verdict.hpp"
