#include "dlab/exact/literal.hpp"

#include "dlab/error.hpp"

namespace dlab {

Rational rational_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) return Rational(Integer(value.dump(), 10));
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw Error(ErrorKind::ParseError, "expected an integer or rational string, got " + value.dump());
}

GaussianRational gaussian_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) return GaussianRational(rational_from_json(value));
  if (value.is_string()) return parse_gaussian(value.get<std::string>());
  throw Error(ErrorKind::ParseError, "expected a scalar literal, got " + value.dump());
}

AlgebraicScalar scalar_from_json(const nlohmann::json& literal) {
  if (!literal.is_object()) return AlgebraicScalar(gaussian_from_json(literal));
  if (!literal.contains("minpoly") || !literal.contains("root_box"))
    throw Error(ErrorKind::ParseError, "abstract scalar needs 'minpoly' and 'root_box'");
  const auto& coeffs = literal.at("minpoly");
  const auto& box = literal.at("root_box");
  if (!coeffs.is_array() || !box.is_array() || box.size() != 4)
    throw Error(ErrorKind::ParseError, "malformed abstract scalar " + literal.dump());
  IntegerVector c;
  for (const auto& entry : coeffs) {
    Rational q = rational_from_json(entry);
    if (q.get_den() != 1) throw Error(ErrorKind::ParseError, "minpoly coefficients must be integers");
    c.push_back(q.get_num());
  }
  RootBox rb{rational_from_json(box[0]), rational_from_json(box[1]), rational_from_json(box[2]),
             rational_from_json(box[3])};
  return AlgebraicScalar::from_minpoly(IntPolynomial(std::move(c)), std::move(rb));
}

AlgebraicScalar parse_scalar(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    return scalar_from_json(j);
  }
  return AlgebraicScalar(parse_gaussian(text));
}

nlohmann::json to_json(const AlgebraicScalar& z) {
  if (z.is_gaussian()) return to_string(z.gaussian());
  const auto& a = z.abstract_form();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : a.minpoly.coefficients()) coeffs.push_back(c.get_str());
  const auto& b = a.root_box;
  return {{"minpoly", coeffs},
          {"root_box", {to_string(b.re_lo), to_string(b.re_hi), to_string(b.im_lo), to_string(b.im_hi)}}};
}

}  // namespace dlab
