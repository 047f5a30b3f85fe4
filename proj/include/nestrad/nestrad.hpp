#pragma once

#include "nestrad/algebra.hpp"
#include "nestrad/config.hpp"
#include "nestrad/errors.hpp"
#include "nestrad/evaluator.hpp"
#include "nestrad/expr.hpp"
#include "nestrad/numeric.hpp"
#include "nestrad/poly.hpp"
#include "nestrad/render.hpp"
#include "nestrad/scheme.hpp"
#include "nestrad/seqspec.hpp"
