#pragma once

/// Umbrella header: the complete library.
///
/// Pipeline: ballots (or a margin matrix) -> weighted majority graph ->
/// beatpath strengths -> Schulze order. The fast path finds a winner by
/// quickselect over pivot partitions; the cubic all-pairs computation in
/// oracle.hpp answers every pairwise comparison at once and doubles as an
/// independent check.

#include "schulze/ballots.hpp"
#include "schulze/core.hpp"
#include "schulze/io.hpp"
#include "schulze/maxmin.hpp"
#include "schulze/oracle.hpp"
#include "schulze/rng.hpp"
#include "schulze/winner.hpp"
