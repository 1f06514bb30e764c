#pragma once

#include "sympbrsk/error.hpp"
#include "sympbrsk/core_order.hpp"
#include "sympbrsk/multiset.hpp"
#include "sympbrsk/grid.hpp"
#include "sympbrsk/peel.hpp"
#include "sympbrsk/brsk.hpp"
#include "sympbrsk/bridge.hpp"
#include "sympbrsk/parallel.hpp"
#include "sympbrsk/serialize.hpp"
#include "sympbrsk/verify.hpp"
