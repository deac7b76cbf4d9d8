#pragma once

#include "arlab/learners/base.hpp"
#include "arlab/learners/cot_reduction.hpp"
#include "arlab/learners/halving.hpp"
#include "arlab/learners/soa_cot.hpp"
#include "arlab/learners/taxonomy_learner.hpp"
