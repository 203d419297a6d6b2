#ifndef MODULI_IO_HPP
#define MODULI_IO_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "moduli/action.hpp"
#include "moduli/perm.hpp"

namespace moduli {

/// "re,im" where both parts are integers or p/q.
GaussianRational parse_exact_scalar(std::string_view text);
/// "re,im" with decimal parts.
Complex parse_floating_scalar(std::string_view text);
/// True when either part contains '.', 'e' or 'E'.
bool is_floating_literal(std::string_view text);

using AnyPoint = std::variant<OmegaPoint<GaussianRational>, OmegaPoint<Complex>>;

/// JSON array of "re,im" strings. The backend is exact unless some entry is
/// a decimal, in which case every entry is read as floating. "inf" is
/// rejected. Throws std::invalid_argument on malformed input.
AnyPoint point_from_json(const nlohmann::json& coords, Tolerance tol = {});

template <class F> nlohmann::json point_to_json(const OmegaPoint<F>& point) {
  auto out = nlohmann::json::array();
  for (const auto& c : point.coords()) {
    out.push_back(to_string(c));
  }
  return out;
}

/// {"n", "backend", "point", "certificate": {"action", "permutations", "residuals"}}.
template <class F>
nlohmann::json certified_json(const OmegaPoint<F>& point, const std::string& action,
                              const std::vector<Permutation>& permutations, const std::vector<double>& residuals) {
  nlohmann::json perms = nlohmann::json::array();
  for (const auto& p : permutations) {
    perms.push_back(p.to_string());
  }
  return {{"n", point.n()},
          {"backend", is_exact(F{}) ? "exact" : "floating"},
          {"point", point_to_json(point)},
          {"certificate", {{"action", action}, {"permutations", perms}, {"residuals", residuals}}}};
}

} // namespace moduli

#endif
