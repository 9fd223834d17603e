#pragma once

#include "hypack/cell.hpp"
#include "hypack/error.hpp"
#include "hypack/lobachevsky.hpp"
#include "hypack/minkowski.hpp"
#include "hypack/optimize.hpp"
#include "hypack/orthoscheme.hpp"
#include "hypack/packing.hpp"
#include "hypack/verify.hpp"
