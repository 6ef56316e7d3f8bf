#pragma once

#include "ward/bfile.hpp"
#include "ward/exact_arith.hpp"
#include "ward/identities.hpp"
#include "ward/partition_transform.hpp"
#include "ward/power_series.hpp"
#include "ward/triangles.hpp"
