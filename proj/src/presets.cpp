#include "pitypical/presets.hpp"

#include <cstdlib>

#include "pitypical/json_io.hpp"

namespace pityp {

SpecPtr preset_spec(const std::string& name) {
  if (name == "q2") return make_field_spec_int(2, {0, 1}, {-2, 1}, 12);
  if (name == "q3") return make_field_spec_int(3, {0, 1}, {-3, 1}, 12);
  if (name == "q2-ramified") return make_field_spec_int(2, {0, 1}, {-2, 0, 1}, 12);
  if (name == "q4-unramified") return make_field_spec_int(2, {1, 1, 1}, {-2, 1}, 12);
  const char* dir = std::getenv("PITYPICAL_PRESET_DIR");
  if (dir && *dir) {
    try {
      return spec_from_json(load_json_file(std::string(dir) + "/" + name + ".json"));
    } catch (const Error&) {
      // fall through to the unknown-preset error
    }
  }
  throw Error(ErrorCode::ParseError, "unknown preset \"" + name + "\"");
}

std::vector<std::string> preset_names() { return {"q2", "q3", "q2-ramified", "q4-unramified"}; }

}  // namespace pityp
