#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "slicecauchy/quadrature.hpp"
#include "slicecauchy/slicefn.hpp"

namespace slicecauchy {

// Function spec grammar:
//   {"poly": ["w,x,y,z", ...]} | {"power": n} | {"exp": {}} | {"log": {}}
inline SliceFn parse_function_spec(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1)
    throw std::invalid_argument("function spec must be an object with exactly one key");
  const auto& [key, val] = *j.items().begin();
  if (key == "poly") {
    if (!val.is_array()) throw std::invalid_argument("poly: expected an array of quaternions");
    std::vector<Quat> c;
    for (const auto& e : val) c.push_back(parse_quat(e.get<std::string>()));
    return SliceFn::poly(QPoly(std::move(c)));
  }
  if (key == "power") {
    if (!val.is_number_integer()) throw std::invalid_argument("power: expected an integer");
    return SliceFn::power(val.get<int>());
  }
  if (key == "exp") return SliceFn::exp_fn();
  if (key == "log") return SliceFn::log_fn();
  throw std::invalid_argument("unknown function spec key '" + key + "'");
}

inline SliceFn parse_function_spec(const std::string& text) {
  return parse_function_spec(nlohmann::json::parse(text));
}

// Surface spec grammar:
//   {"sphere": {"center": "w,x,y,z", "radius": r}} | {"box": {"min": [..4..], "max": [..4..]}}
inline Surface parse_surface_spec(const nlohmann::json& j) {
  if (!j.is_object() || j.size() != 1)
    throw std::invalid_argument("surface spec must be an object with exactly one key");
  const auto& [key, val] = *j.items().begin();
  if (key == "sphere") {
    for (const auto& [k, v] : val.items())
      if (k != "center" && k != "radius")
        throw std::invalid_argument("sphere: unknown key '" + k + "'");
    Sphere3 s;
    s.center = parse_quat(val.at("center").get<std::string>());
    s.radius = val.at("radius").get<double>();
    if (s.radius <= 0.0) throw std::invalid_argument("sphere: radius must be positive");
    return s;
  }
  if (key == "box") {
    for (const auto& [k, v] : val.items())
      if (k != "min" && k != "max") throw std::invalid_argument("box: unknown key '" + k + "'");
    Box4 b;
    auto lo = val.at("min"), hi = val.at("max");
    if (!lo.is_array() || lo.size() != 4 || !hi.is_array() || hi.size() != 4)
      throw std::invalid_argument("box: min/max must be arrays of 4 numbers");
    for (int k = 0; k < 4; ++k) {
      b.lo[k] = lo[k].get<double>();
      b.hi[k] = hi[k].get<double>();
      if (!(b.lo[k] < b.hi[k]))
        throw std::invalid_argument("box: min must be componentwise below max");
    }
    return b;
  }
  throw std::invalid_argument("unknown surface spec key '" + key + "'");
}

inline Surface parse_surface_spec(const std::string& text) {
  return parse_surface_spec(nlohmann::json::parse(text));
}

}  // namespace slicecauchy
