#pragma once

/* File formats.  A quiver with involution is a single JSON document:
 *
 *   {"name": "a2-swap",
 *    "vertices": ["1", "2"],
 *    "arrows": [{"name": "a", "src": "1", "tgt": "2"}],
 *    "involution": {"vertices": {"1": "2", "2": "1"}, "arrows": {"a": "a"}}}
 *
 * A representation literal is {"dims": {"1": 1, "2": 1},
 * "maps": {"a": [[0, 0]]}} with 0-based indices; omitted vertices have
 * dimension 0 and omitted arrows the zero map.  A form literal extends a
 * representation literal with {"form": {"1": [0], "2": [0]}} listing
 * b per vertex.
 */

#include "f1hall/forms.hpp"
#include "f1hall/hall.hpp"
#include "f1hall/hallmod.hpp"
#include "f1hall/quiver.hpp"
#include "f1hall/rep.hpp"

#include <json.hpp>

#include <string>
#include <tuple>

namespace f1hall {

struct QuiverFile {
    Quiver quiver;
    Involution sigma;
    std::string name;
};

/// Throws std::invalid_argument with a diagnostic on malformed input.
QuiverFile parse_quiver_json(const nlohmann::json& j);
QuiverFile load_quiver_file(const std::string& path);

Rep parse_rep_literal(const Quiver& q, const nlohmann::json& j);
SymmetricForm parse_form_literal(const Quiver& q, const Involution& s,
                                 const nlohmann::json& j);

nlohmann::json to_json(const HallElement& x);
nlohmann::json to_json(const ModuleElement& x);
nlohmann::json to_json(const Tensor2& x);
nlohmann::json to_json(const Tensor3& x);
nlohmann::json to_json(const TensorHM& x);

std::string to_text(const HallElement& x);
std::string to_text(const ModuleElement& x);
std::string to_text(const Tensor2& x);
std::string to_text(const TensorHM& x);

}  // namespace f1hall
