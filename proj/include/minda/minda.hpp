#pragma once

#include "errors.hpp"
#include "series.hpp"
#include "solve.hpp"
#include "region.hpp"
#include "psi.hpp"
#include "extremal.hpp"
#include "distortion.hpp"
#include "bohr.hpp"
#include "convolution.hpp"
#include "radius.hpp"
#include "subordination.hpp"
