#pragma once

// Umbrella header.

#include "barabanov.hpp"
#include "config.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "finiteness.hpp"
#include "jsr_bounds.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "scalar.hpp"
#include "structure.hpp"
#include "tuple.hpp"
#include "words.hpp"
