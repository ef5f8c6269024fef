#pragma once

#include "gwalk/bench.hpp"
#include "gwalk/error.hpp"
#include "gwalk/field.hpp"
#include "gwalk/generic_walk.hpp"
#include "gwalk/groebner.hpp"
#include "gwalk/integer.hpp"
#include "gwalk/io.hpp"
#include "gwalk/marked.hpp"
#include "gwalk/monomial.hpp"
#include "gwalk/ordering.hpp"
#include "gwalk/parse.hpp"
#include "gwalk/polynomial.hpp"
#include "gwalk/svg.hpp"
#include "gwalk/systems.hpp"
#include "gwalk/walk.hpp"
