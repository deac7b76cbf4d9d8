#pragma once

#include "arlab/dims/branches.hpp"
#include "arlab/dims/class_table.hpp"
#include "arlab/dims/littlestone.hpp"
#include "arlab/dims/optimal.hpp"
#include "arlab/dims/tree.hpp"
#include "arlab/dims/vc.hpp"
#include "arlab/dims/version_subset.hpp"
