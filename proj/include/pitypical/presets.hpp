#pragma once

#include "pitypical/field.hpp"

namespace pityp {

/// Built-in field presentations, all at M = 12:
///   q2            Q_2            (p=2, g=y,       E=x-2)
///   q3            Q_3            (p=3, g=y,       E=x-3)
///   q2-ramified   Q_2(sqrt 2)    (p=2, g=y,       E=x^2-2)
///   q4-unramified Q_2 unram. deg 2 (p=2, g=y^2+y+1, E=x-2)
/// Unknown names fall back to $PITYPICAL_PRESET_DIR/<name>.json.
SpecPtr preset_spec(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace pityp
