#pragma once

// Algebra model files (JSON). Rationals are "p/q" strings; basis references
// may be given as indices or basis names on input and are written as indices.

#include "naklab/frobenius.hpp"

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

namespace naklab {

/// Throws InputError on malformed JSON or schema violations.
AlgebraSpec parse_model(std::string_view json_text);
AlgebraSpec load_model_file(const std::filesystem::path& path);

/// Canonical form: fixed key order, i <= j product entries only, reduced
/// fractions, two-space indentation, trailing newline.
std::string model_to_json(const AlgebraSpec& spec);

std::shared_ptr<const GradedFrobeniusAlgebra> make_algebra(AlgebraSpec spec);

}  // namespace naklab
