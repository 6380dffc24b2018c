#pragma once

// Umbrella header: finite oriented disingquandles, their constructions, and
// coloring invariants of oriented dichromatic singular link diagrams.

#include "odsq/algebra.hpp"
#include "odsq/audit.hpp"
#include "odsq/catalog.hpp"
#include "odsq/coloring.hpp"
#include "odsq/diagram.hpp"
#include "odsq/dsl.hpp"
#include "odsq/enumerate.hpp"
#include "odsq/families.hpp"
#include "odsq/morphism.hpp"
#include "odsq/poly.hpp"
#include "odsq/presentation.hpp"
#include "odsq/report.hpp"
#include "odsq/table.hpp"
#include "odsq/term.hpp"
