#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace piezoscan {

/// Elastic (and optionally piezoelectric) constants of one layer material.
struct Material {
  std::string name;
  double young_modulus = 0.0;  ///< Pa
  std::optional<double> d31;   ///< m/V, piezoelectric materials only
  std::optional<double> s11E;  ///< 1/Pa, compliance at constant field

  bool is_piezoelectric() const { return d31.has_value(); }

  /// Throws ValidationError unless E > 0 and, when s11E is given,
  /// |E * s11E - 1| <= 1e-6.
  void validate() const;
};

/// Default constants. The model has no published constants of its own, so
/// these are datasheet values for single-crystal silicon and PZT-5H.
namespace defaults {
inline constexpr double silicon_young_modulus = 169e9;
inline constexpr double pzt5h_young_modulus = 60.6e9;
// Datasheet s11E is 16.5 /TPa; 60.6 GPa * 16.5 /TPa = 0.9999, which would
// break reciprocity, so the compliance is stored as exactly 1/E (16.5017 /TPa).
inline constexpr double pzt5h_s11E = 1.0 / pzt5h_young_modulus;
inline constexpr double pzt5h_d31 = -274e-12;
}  // namespace defaults

/// Name -> material map with case-insensitive lookup.
class MaterialRegistry {
 public:
  MaterialRegistry() = default;

  /// Registry holding "silicon" and "pzt-5h".
  static MaterialRegistry with_defaults();

  /// Adds or replaces (same name, ignoring case) an entry.
  void insert(Material material);

  const Material& lookup(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, Material> entries_;  // keyed by lower-cased name
};

}  // namespace piezoscan
