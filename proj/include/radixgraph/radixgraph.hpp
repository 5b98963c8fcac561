#pragma once

#include "radixgraph/digits.hpp"
#include "radixgraph/errors.hpp"
#include "radixgraph/expansion.hpp"
#include "radixgraph/graph.hpp"
#include "radixgraph/numtheory.hpp"
#include "radixgraph/report.hpp"
