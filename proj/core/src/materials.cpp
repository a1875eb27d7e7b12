#include "piezoscan/materials.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "piezoscan/errors.hpp"

namespace piezoscan {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

void Material::validate() const {
  if (!(young_modulus > 0.0) || !std::isfinite(young_modulus)) {
    throw ValidationError("material '" + name + "': young_modulus must be positive");
  }
  if (d31 && !std::isfinite(*d31)) throw ValidationError("material '" + name + "': d31 must be finite");
  if (s11E) {
    if (!(*s11E > 0.0)) throw ValidationError("material '" + name + "': s11E must be positive");
    if (std::abs(young_modulus * *s11E - 1.0) > 1e-6) {
      throw ValidationError("material '" + name + "': young_modulus and s11E are not reciprocal");
    }
  }
}

MaterialRegistry MaterialRegistry::with_defaults() {
  MaterialRegistry r;
  r.insert({"silicon", defaults::silicon_young_modulus, std::nullopt, std::nullopt});
  r.insert({"pzt-5h", defaults::pzt5h_young_modulus, defaults::pzt5h_d31, defaults::pzt5h_s11E});
  return r;
}

void MaterialRegistry::insert(Material material) {
  material.validate();
  auto key = lower(material.name);
  entries_.insert_or_assign(std::move(key), std::move(material));
}

const Material& MaterialRegistry::lookup(std::string_view name) const {
  auto it = entries_.find(lower(name));
  if (it == entries_.end()) {
    std::string msg = "unknown material '" + std::string(name) + "'; available:";
    for (const auto& [key, m] : entries_) msg += " " + m.name;
    throw UnknownMaterialError(msg);
  }
  return it->second;
}

bool MaterialRegistry::contains(std::string_view name) const { return entries_.contains(lower(name)); }

std::vector<std::string> MaterialRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [key, m] : entries_) out.push_back(m.name);
  return out;
}

}  // namespace piezoscan
