#pragma once

#include "arlab/classes/alternating.hpp"
#include "arlab/classes/glue.hpp"
#include "arlab/classes/hard.hpp"
#include "arlab/classes/linear.hpp"
#include "arlab/classes/random.hpp"
#include "arlab/classes/rate.hpp"
#include "arlab/classes/rules.hpp"
#include "arlab/classes/taxonomy.hpp"
