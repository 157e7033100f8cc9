#ifndef MONOSEP_JSON_IO_HPP_
#define MONOSEP_JSON_IO_HPP_

#include <json.hpp>

#include "monosep/monophonic.hpp"
#include "monosep/separation.hpp"

namespace monosep {

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const HullTrace& trace);
nlohmann::json to_json(const SeparationResult& result);

}  // namespace monosep

#endif  // MONOSEP_JSON_IO_HPP_
