#pragma once

#include "bigint.hpp"
#include "block_space.hpp"
#include "caps.hpp"
#include "code_analysis.hpp"
#include "distribution.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "linear_code.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "partitions.hpp"
#include "poset.hpp"
#include "space_walk.hpp"
#include "weight_model.hpp"
