#include "moduli/io.hpp"

#include <stdexcept>

namespace moduli {

namespace {

std::pair<std::string, std::string> split_parts(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw std::invalid_argument("expected \"re,im\", got \"" + std::string(text) + "\"");
  }
  std::string re(text.substr(0, comma));
  std::string im(text.substr(comma + 1));
  for (const auto* part : {&re, &im}) {
    if (part->empty() || part->find("inf") != std::string::npos || part->find("nan") != std::string::npos) {
      throw std::invalid_argument("bad coordinate \"" + std::string(text) + "\"");
    }
  }
  return {re, im};
}

mpq_class parse_rational(const std::string& part) {
  mpq_class q;
  if (q.set_str(part, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("bad rational \"" + part + "\"");
  }
  q.canonicalize();
  return q;
}

double parse_decimal(const std::string& part) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(part, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad decimal \"" + part + "\"");
  }
  if (used != part.size() || !std::isfinite(v)) {
    throw std::invalid_argument("bad decimal \"" + part + "\"");
  }
  return v;
}

} // namespace

bool is_floating_literal(std::string_view text) { return text.find_first_of(".eE") != std::string_view::npos; }

GaussianRational parse_exact_scalar(std::string_view text) {
  const auto [re, im] = split_parts(text);
  return {parse_rational(re), parse_rational(im)};
}

Complex parse_floating_scalar(std::string_view text) {
  const auto [re, im] = split_parts(text);
  // Rational parts are allowed too.
  auto value = [](const std::string& part) {
    return is_floating_literal(part) ? parse_decimal(part) : parse_rational(part).get_d();
  };
  return {value(re), value(im)};
}

AnyPoint point_from_json(const nlohmann::json& coords, Tolerance tol) {
  if (!coords.is_array()) {
    throw std::invalid_argument("point must be a JSON array of \"re,im\" strings");
  }
  std::vector<std::string> texts;
  bool floating = false;
  for (const auto& c : coords) {
    if (!c.is_string()) {
      throw std::invalid_argument("point must be a JSON array of \"re,im\" strings");
    }
    texts.push_back(c.get<std::string>());
    floating = floating || is_floating_literal(texts.back());
  }
  const int n = static_cast<int>(texts.size()) + 2;
  if (floating) {
    std::vector<Complex> values;
    for (const auto& t : texts) {
      values.push_back(parse_floating_scalar(t));
    }
    return OmegaPoint<Complex>(n, std::move(values), tol);
  }
  std::vector<GaussianRational> values;
  for (const auto& t : texts) {
    values.push_back(parse_exact_scalar(t));
  }
  return OmegaPoint<GaussianRational>(n, std::move(values), tol);
}

} // namespace moduli
