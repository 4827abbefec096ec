#pragma once

#include "symfund/cache.hpp"
#include "symfund/derivation.hpp"
#include "symfund/errors.hpp"
#include "symfund/io.hpp"
#include "symfund/partition.hpp"
#include "symfund/rational.hpp"
#include "symfund/shadows.hpp"
#include "symfund/splethysm.hpp"
#include "symfund/symfun.hpp"
#include "symfund/version.hpp"
