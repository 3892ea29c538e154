#pragma once

#include "casimir1d/forces.hpp"
#include "casimir1d/model.hpp"
#include "casimir1d/quadrature.hpp"
#include "casimir1d/scattering.hpp"
#include "casimir1d/series.hpp"
#include "casimir1d/special_functions.hpp"
#include "casimir1d/thermo.hpp"
#include "casimir1d/version.hpp"
