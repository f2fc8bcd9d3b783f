#pragma once

#include "sppr/error.hpp"
#include "sppr/rational.hpp"
#include "sppr/graph.hpp"
#include "sppr/shortest_paths.hpp"
#include "sppr/enumerate.hpp"
#include "sppr/path_system.hpp"
#include "sppr/io.hpp"
#include "sppr/reduction.hpp"
#include "sppr/constructions.hpp"
#include "sppr/dag_reweight.hpp"
#include "sppr/preserve_check.hpp"
#include "sppr/lp.hpp"
#include "sppr/aspect_opt.hpp"
#include "sppr/lemma_audit.hpp"
