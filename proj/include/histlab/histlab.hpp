#pragma once

#include "histlab/bigcount.hpp"
#include "histlab/budget.hpp"
#include "histlab/certificate.hpp"
#include "histlab/constructions.hpp"
#include "histlab/dot.hpp"
#include "histlab/graph.hpp"
#include "histlab/graph6.hpp"
#include "histlab/hist_search.hpp"
#include "histlab/roles.hpp"
#include "histlab/spanning_tree.hpp"
#include "histlab/star_factor.hpp"
#include "histlab/tree_count.hpp"
#include "histlab/version.hpp"
