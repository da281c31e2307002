#pragma once

#include "catalog.hpp"
#include "cocycle.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "group.hpp"
#include "gyro.hpp"
#include "invariants.hpp"
#include "loop.hpp"
#include "mapping_groups.hpp"
#include "parallel.hpp"
#include "perm.hpp"
#include "report.hpp"
#include "search.hpp"
#include "theorems.hpp"
