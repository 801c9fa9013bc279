#pragma once

#include "propcal/census.hpp"
#include "propcal/filtration.hpp"
#include "propcal/freebasis.hpp"
#include "propcal/idempotent.hpp"
#include "propcal/lie.hpp"
#include "propcal/metabelian.hpp"
#include "propcal/suites.hpp"
#include "propcal/words.hpp"
