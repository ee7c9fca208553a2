#pragma once

#include "kshg/bounds.hpp"
#include "kshg/error.hpp"
#include "kshg/expansion.hpp"
#include "kshg/families.hpp"
#include "kshg/hypergraph.hpp"
#include "kshg/linalg3.hpp"
#include "kshg/mis.hpp"
#include "kshg/propagation.hpp"
#include "kshg/realization.hpp"
#include "kshg/text_format.hpp"
