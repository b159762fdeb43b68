#pragma once

#include "pitypical/json_io.hpp"

namespace pityp {

/// Deterministic property suites over the built-in presets; same seed gives
/// a byte-identical report.  The report is one JSON document with one entry
/// per suite (ordered by suite name) and an overall "pass".
ojson run_selftest(u64 seed);

}  // namespace pityp
