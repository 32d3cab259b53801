#pragma once

#include "lichi/characters.hpp"
#include "lichi/core/complex.hpp"
#include "lichi/core/error.hpp"
#include "lichi/core/number_theory.hpp"
#include "lichi/core/parallel.hpp"
#include "lichi/core/precision.hpp"
#include "lichi/lfunc/critical_line.hpp"
#include "lichi/lfunc/l_value.hpp"
#include "lichi/lfunc/zero_finder.hpp"
#include "lichi/lfunc/zero_list.hpp"
#include "lichi/li/arith.hpp"
#include "lichi/li/result.hpp"
#include "lichi/li/zero_sum.hpp"
#include "lichi/specfun/bernoulli.hpp"
#include "lichi/specfun/gamma.hpp"
#include "lichi/specfun/lambert_w.hpp"
#include "lichi/specfun/orthopoly.hpp"
#include "lichi/specfun/zeta.hpp"
