#pragma once

#include "slicecauchy/driver.hpp"
#include "slicecauchy/fueter.hpp"
#include "slicecauchy/identities.hpp"
#include "slicecauchy/kernels.hpp"
#include "slicecauchy/quadrature.hpp"
#include "slicecauchy/quaternion.hpp"
#include "slicecauchy/rationalh.hpp"
#include "slicecauchy/rpoly4.hpp"
#include "slicecauchy/slicefn.hpp"
#include "slicecauchy/spec_parse.hpp"
#include "slicecauchy/zonal.hpp"
