#pragma once

#include "konig/algorithms/check.hpp"
#include "konig/bench.hpp"
#include "konig/certificates.hpp"
#include "konig/errors.hpp"
#include "konig/generators.hpp"
#include "konig/graph.hpp"
#include "konig/io.hpp"
#include "konig/oracle.hpp"
#include "konig/parity_union_find.hpp"
#include "konig/random.hpp"
#include "konig/report.hpp"
