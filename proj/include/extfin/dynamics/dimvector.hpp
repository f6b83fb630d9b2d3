#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "extfin/errors.hpp"
#include "extfin/exactnum/rational.hpp"

namespace extfin {

/// (t | s): top and socle multiplicities per vertex.
struct DimVector {
  std::vector<BigInt> t;
  std::vector<BigInt> s;

  DimVector() = default;
  DimVector(std::vector<BigInt> top, std::vector<BigInt> soc) : t(std::move(top)), s(std::move(soc)) {
    if (t.size() != s.size()) throw InputError("dimension vector halves differ in length");
  }
  static DimVector from_longs(const std::vector<long>& top, const std::vector<long>& soc) {
    std::vector<BigInt> a(top.begin(), top.end()), b(soc.begin(), soc.end());
    return DimVector(std::move(a), std::move(b));
  }

  std::size_t n() const { return t.size(); }
  bool is_zero() const {
    for (std::size_t i = 0; i < n(); ++i) {
      if (t[i] != 0 || s[i] != 0) return false;
    }
    return true;
  }
  bool is_nonnegative() const {
    for (std::size_t i = 0; i < n(); ++i) {
      if (t[i] < 0 || s[i] < 0) return false;
    }
    return true;
  }
  BigInt total() const {
    BigInt acc = 0;
    for (std::size_t i = 0; i < n(); ++i) acc += t[i] + s[i];
    return acc;
  }
  /// (t_1, ..., t_n, s_1, ..., s_n).
  std::vector<Rational> stacked() const {
    std::vector<Rational> v;
    for (const auto& x : t) v.emplace_back(x);
    for (const auto& x : s) v.emplace_back(x);
    return v;
  }
  /// Inverse of stacked(); throws InputError for odd length or non-integers.
  static DimVector from_stacked(const std::vector<Rational>& v);

  /// "(1,1|1,1)".
  std::string to_string() const;

  friend bool operator==(const DimVector& a, const DimVector& b) = default;
};

nlohmann::json dimvector_to_json(const DimVector& v);
/// Throws InputError on malformed input or mismatched lengths.
DimVector dimvector_from_json(const nlohmann::json& j);
/// "1,1|1,1" or "(1,1|1,1)".
DimVector parse_dimvector(const std::string& text);

}  // namespace extfin
