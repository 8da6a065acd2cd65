#pragma once

#include "packcolor/coloring_json.hpp"
#include "packcolor/diagnostic.hpp"
#include "packcolor/engine.hpp"
#include "packcolor/exact.hpp"
#include "packcolor/generators.hpp"
#include "packcolor/graph.hpp"
#include "packcolor/graph_io.hpp"
#include "packcolor/hview.hpp"
#include "packcolor/packing.hpp"
#include "packcolor/partition.hpp"
#include "packcolor/pipeline.hpp"
#include "packcolor/subdivision.hpp"
