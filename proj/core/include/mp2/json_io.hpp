#pragma once

#include <string>

#include "mp2/newforms.hpp"

namespace mp2 {

/// Character serialization used by the command line tool:
/// {"kind", "p", "level", "exponent", "varpi_root", "varpi_qexp",
///  "shift_val", "shift_unit"} with unused fields omitted per kind.
std::string unit_character_to_json(const UnitCharacter& eta);
UnitCharacter unit_character_from_json(const FieldConfig& cfg, const std::string& s);

std::string mult_character_to_json(const MultCharacter& mu);
MultCharacter mult_character_from_json(const FieldConfig& cfg, const std::string& s);

std::string additive_character_to_json(const AdditiveCharacter& psi);
AdditiveCharacter additive_character_from_json(const FieldConfig& cfg,
                                               const std::string& s);

/// Descriptor serialization, e.g. {"kind":"ps","mu":{...}} or
/// {"kind":"sc","delta":1,"c_sigma":2,"defect":1,"central_sign":1}.
std::string descriptor_to_json(const ReprDescriptor& repr);
ReprDescriptor descriptor_from_json(const FieldConfig& cfg, const std::string& s);

}  // namespace mp2
