#pragma once

#include "necklace/arithmetic.hpp"
#include "necklace/counting.hpp"
#include "necklace/cyclo.hpp"
#include "necklace/digits.hpp"
#include "necklace/errors.hpp"
#include "necklace/euler.hpp"
#include "necklace/exact.hpp"
#include "necklace/fq_oracle.hpp"
#include "necklace/ratpoly.hpp"
#include "necklace/ring.hpp"
#include "necklace/series.hpp"
