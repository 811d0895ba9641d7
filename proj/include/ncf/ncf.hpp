#pragma once

// Umbrella header. Users should generally include only this file.

#include "ncf/analysis.hpp"
#include "ncf/bigint.hpp"
#include "ncf/digits.hpp"
#include "ncf/dynamics.hpp"
#include "ncf/errors.hpp"
#include "ncf/exact_real.hpp"
#include "ncf/expansion.hpp"
#include "ncf/matrix2.hpp"
#include "ncf/quadrature.hpp"
#include "ncf/substitution.hpp"
#include "ncf/word.hpp"
#include "ncf/word_builder.hpp"
