#pragma once

#include "walg/diffpoly.hpp"
#include "walg/lie_core.hpp"
#include "walg/miura.hpp"
#include "walg/opalg.hpp"
#include "walg/pva.hpp"
#include "walg/rational.hpp"
#include "walg/serialize.hpp"
#include "walg/wgen.hpp"
