#pragma once

#include "slicereg/errors.hpp"
#include "slicereg/geocheck.hpp"
#include "slicereg/maps.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/sample_grid.hpp"
#include "slicereg/series.hpp"
#include "slicereg/verify.hpp"
