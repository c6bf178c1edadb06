#pragma once

#include "symmcfg/avoider.hpp"
#include "symmcfg/coloring.hpp"
#include "symmcfg/dyadic.hpp"
#include "symmcfg/error.hpp"
#include "symmcfg/exact.hpp"
#include "symmcfg/families.hpp"
#include "symmcfg/search.hpp"
#include "symmcfg/selftest.hpp"
#include "symmcfg/serialize.hpp"
#include "symmcfg/star_algebra.hpp"
#include "symmcfg/star_polynomial.hpp"
#include "symmcfg/words.hpp"
