#pragma once

#include "treegen/adjacency.hpp"
#include "treegen/assemble.hpp"
#include "treegen/free.hpp"
#include "treegen/generator.hpp"
#include "treegen/oracle.hpp"
#include "treegen/rooted.hpp"
#include "treegen/weight_seq.hpp"
