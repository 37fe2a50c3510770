#pragma once

#include "bonnet/cinfty/algebra.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bonnet::cinfty {

struct AlgebraError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// JSON document; see docs/formats.md. Structural checks run, axioms do not.
// Throws AlgebraError.
CInftyAlgebra load_algebra(std::string_view json_text);
CInftyAlgebra load_algebra_file(const std::filesystem::path& path);

// Stable key order and entry order; load_algebra(save_algebra(a)) == a.
std::string save_algebra(const CInftyAlgebra& a);

}  // namespace bonnet::cinfty
