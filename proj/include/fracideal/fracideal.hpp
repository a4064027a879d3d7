#pragma once

#include "fracideal/bigint.hpp"
#include "fracideal/lattice.hpp"
#include "fracideal/quadratic.hpp"
#include "fracideal/numsg.hpp"
#include "fracideal/verdict.hpp"
#include "fracideal/backends.hpp"
#include "fracideal/classify.hpp"
#include "fracideal/expr.hpp"
#include "fracideal/spec_file.hpp"
#include "fracideal/report.hpp"
#include "fracideal/box_oracle.hpp"
#include "fracideal/selftest.hpp"
