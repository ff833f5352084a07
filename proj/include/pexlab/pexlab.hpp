#pragma once

// Umbrella header for the whole library.

#include "pexlab/af.hpp"
#include "pexlab/bits.hpp"
#include "pexlab/cnf.hpp"
#include "pexlab/decisions.hpp"
#include "pexlab/encodings.hpp"
#include "pexlab/errors.hpp"
#include "pexlab/formula.hpp"
#include "pexlab/generators.hpp"
#include "pexlab/realisable.hpp"
#include "pexlab/reduction.hpp"
#include "pexlab/semantics.hpp"
