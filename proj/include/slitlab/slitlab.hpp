#pragma once

#include "slitlab/errors.hpp"
#include "slitlab/slit_system.hpp"
#include "slitlab/amplitude.hpp"
#include "slitlab/distribution.hpp"
#include "slitlab/fringe.hpp"
#include "slitlab/fit.hpp"
#include "slitlab/oracle.hpp"
#include "slitlab/config.hpp"
#include "slitlab/csv.hpp"
#include "slitlab/svg.hpp"
