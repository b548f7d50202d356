#pragma once

#include "liesym/equation_factory.hpp"
#include "liesym/expr.hpp"
#include "liesym/jet.hpp"
#include "liesym/linear_algebra.hpp"
#include "liesym/parser.hpp"
#include "liesym/polynomial.hpp"
#include "liesym/rational.hpp"
#include "liesym/rational_function.hpp"
#include "liesym/symmetry.hpp"
#include "liesym/variables.hpp"
#include "liesym/vector_field.hpp"
