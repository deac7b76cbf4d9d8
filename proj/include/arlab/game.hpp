#pragma once

#include "arlab/game/adversaries.hpp"
#include "arlab/game/exhaustive.hpp"
#include "arlab/game/minimax.hpp"
#include "arlab/game/protocol.hpp"
#include "arlab/game/transcript.hpp"
