#pragma once

#include "altlab/core_types.hpp"
#include "altlab/double_double.hpp"
#include "altlab/gauss_legendre.hpp"
#include "altlab/panel_quadrature.hpp"
#include "altlab/series.hpp"
#include "altlab/bessel.hpp"
#include "altlab/hankel.hpp"
#include "altlab/fourier2d.hpp"
#include "altlab/poles.hpp"
#include "altlab/residue.hpp"
#include "altlab/asymptotic.hpp"
#include "altlab/config.hpp"
#include "altlab/harness.hpp"
#include "altlab/acceptance.hpp"
