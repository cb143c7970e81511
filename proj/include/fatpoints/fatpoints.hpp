#pragma once

// Everything: fields, forms, geometry, linear systems, generic dimensions,
// named configurations, JSON encodings and the claim suite.

#include "configs.hpp"
#include "field.hpp"
#include "form.hpp"
#include "geom.hpp"
#include "json_io.hpp"
#include "linsys.hpp"
#include "matrix.hpp"
#include "param_poly.hpp"
#include "random.hpp"
#include "symbolic_rank.hpp"
#include "unexpected.hpp"
#include "verify.hpp"
