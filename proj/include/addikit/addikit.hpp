#pragma once

#include "additive_code.hpp"
#include "bounds.hpp"
#include "budget.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "field.hpp"
#include "linear_code.hpp"
#include "linearity.hpp"
#include "matrix.hpp"
#include "norm_trace.hpp"
#include "rational.hpp"
#include "semifield.hpp"
#include "subspace_family.hpp"
