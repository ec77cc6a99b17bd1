#pragma once

#include "ansatz.hpp"
#include "coeff_poly.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "json_io.hpp"
#include "lyndon.hpp"
#include "nc_poly.hpp"
#include "numeric.hpp"
#include "poly_text.hpp"
#include "rational.hpp"
#include "scheme.hpp"
#include "word.hpp"
