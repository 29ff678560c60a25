#pragma once

#include "sandpiles/characterization.hpp"
#include "sandpiles/coding.hpp"
#include "sandpiles/configuration.hpp"
#include "sandpiles/errors.hpp"
#include "sandpiles/explore.hpp"
#include "sandpiles/export.hpp"
#include "sandpiles/models.hpp"
#include "sandpiles/procedures.hpp"
