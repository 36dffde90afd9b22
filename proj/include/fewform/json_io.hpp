#pragma once

#include <string>

#include "fewform/forms.hpp"

namespace fewform {

// {"degree": d, "coeffs": ["a0", ..., "ad"]} with rationals as "p/q" strings.
BinaryForm form_from_json_text(const std::string& text);
std::string form_to_json_text(const BinaryForm& f);

// {"r": r, "blocks": {"k": [[a0, ..., ar], ...]}}.
FewnomialFamily family_from_json_text(const std::string& text);
std::string family_to_json_text(const FewnomialFamily& fam);

std::string load_text_file(const std::string& path);

// Inline JSON when the argument starts with '{', file path otherwise.
BinaryForm form_from_arg(const std::string& arg);
FewnomialFamily family_from_arg(const std::string& arg);

}  // namespace fewform
