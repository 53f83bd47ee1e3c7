#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "dlab/exact/algebraic.hpp"

namespace dlab {

/// Scalar literal: "p/q", "p/q+r/s*i", or an object
/// {"minpoly": [c0, c1, ...], "root_box": [re_lo, re_hi, im_lo, im_hi]}
/// whose entries are integers or rational strings. A text argument starting
/// with '{' is parsed as JSON first.
AlgebraicScalar scalar_from_json(const nlohmann::json& literal);
AlgebraicScalar parse_scalar(std::string_view text);

/// Rational from a JSON number (integers only) or string.
Rational rational_from_json(const nlohmann::json& value);

/// Gaussian rational from a JSON string literal or integer.
GaussianRational gaussian_from_json(const nlohmann::json& value);

nlohmann::json to_json(const AlgebraicScalar& z);

}  // namespace dlab
