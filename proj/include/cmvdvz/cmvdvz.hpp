#ifndef CMVDVZ_CMVDVZ_HPP
#define CMVDVZ_CMVDVZ_HPP

#include "banded.hpp"
#include "chebyshev.hpp"
#include "dvz.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "measure.hpp"
#include "opuc.hpp"
#include "quadrature.hpp"
#include "verblunsky.hpp"
#include "verify.hpp"

#endif
