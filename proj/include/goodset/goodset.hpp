#pragma once

#include "goodset/apery.hpp"
#include "goodset/check.hpp"
#include "goodset/colength.hpp"
#include "goodset/curve/invariants.hpp"
#include "goodset/curve/value_sets.hpp"
#include "goodset/duality.hpp"
#include "goodset/fiber.hpp"
#include "goodset/good_set.hpp"
#include "goodset/io.hpp"
#include "goodset/maximals.hpp"
#include "goodset/render.hpp"
#include "goodset/report.hpp"
