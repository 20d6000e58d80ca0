#pragma once

#include "hyreg/berge.hpp"
#include "hyreg/complex.hpp"
#include "hyreg/decomposability.hpp"
#include "hyreg/enumerate.hpp"
#include "hyreg/homology.hpp"
#include "hyreg/hypergraph.hpp"
#include "hyreg/io.hpp"
#include "hyreg/matching.hpp"
#include "hyreg/verify.hpp"
