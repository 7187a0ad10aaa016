#pragma once

// JSON forms of towers, closure sessions, difference fields and maps.
//
// Tower: {"base": "Q" | {"Fp": p} | {"FpT": p},
//         "gens": [{"name": "a", "minpoly": "x^2-2", "insep_exp": k}]}

#include <string>
#include <vector>

#include "json.hpp"

#include "dcf/closure.hpp"
#include "dcf/difference.hpp"
#include "dcf/embed.hpp"

namespace dcf {

using Json = nlohmann::json;

// Inline JSON when the text starts with '{', '[' or '"', otherwise a file path.
Json load_json_arg(const std::string& arg);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

BaseField base_from_json(const Json& j);
Json base_to_json(const BaseField& b);
// Each generator is checked by extend_tower.
TowerField tower_from_json(const Json& j);
Json tower_to_json(const TowerField& t);

// Generator images: an array in tower order or an object keyed by generator
// name; expressions are parsed in `target`.
std::vector<TowerElement> images_from_json(const Json& j, const TowerField& source, const TowerField& target);
Json images_to_json(const TowerField& source, const std::vector<TowerElement>& images);

// {"tower": ..., "sigma": ...}
DifferenceField difference_field_from_json(const Json& j);
Json difference_field_to_json(const DifferenceField& D);

Json session_to_json(const ClosurePresentation& c);
ClosurePresentation session_from_json(const Json& j);

Json log_entry_to_json(const ClosureLogEntry& e);
ClosureLogEntry log_entry_from_json(const Json& j);

Json assignments_to_json(const std::vector<Assignment>& log);

}  // namespace dcf
