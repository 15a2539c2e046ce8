#pragma once

#include "arith/bigint.hpp"
#include "arith/chains.hpp"
#include "arith/counting.hpp"
#include "arith/enumerate.hpp"
#include "arith/error.hpp"
#include "arith/graph.hpp"
#include "arith/io.hpp"
#include "arith/kernel.hpp"
#include "arith/structure.hpp"
#include "arith/transforms.hpp"
#include "arith/verify.hpp"
