#pragma once

#include "arlab/stochastic/model.hpp"
#include "arlab/stochastic/simulate.hpp"
