#pragma once

#include "catchain/chain.hpp"
#include "catchain/chfunctor.hpp"
#include "catchain/fincat.hpp"
#include "catchain/json_io.hpp"
#include "catchain/linalg.hpp"
#include "catchain/matrix.hpp"
#include "catchain/nerve.hpp"
#include "catchain/rational.hpp"
#include "catchain/twovect.hpp"
