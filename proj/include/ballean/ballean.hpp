#pragma once

#include "ballean/extnat.hpp"
#include "ballean/exactmat.hpp"
#include "ballean/lattice.hpp"
#include "ballean/groups/finite_abelian.hpp"
#include "ballean/groups/prufer.hpp"
#include "ballean/groups/descriptor.hpp"
#include "ballean/kernel/set_cover.hpp"
#include "ballean/kernel/explicit_ballean.hpp"
#include "ballean/kernel/group_balls.hpp"
#include "ballean/kernel/hamming.hpp"
#include "ballean/witnesses.hpp"
#include "ballean/io/json.hpp"
#include "ballean/io/parse.hpp"
#include "ballean/verify.hpp"
