#pragma once

// Umbrella header.

#include "arith.hpp"
#include "classfield.hpp"
#include "integer.hpp"
#include "norm_sequences.hpp"
#include "primality.hpp"
#include "quadratic_forms.hpp"
#include "representation.hpp"
#include "verify.hpp"
