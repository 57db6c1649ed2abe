#include "dimeq/orbit.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "dimeq/embedded_fixtures.hpp"

namespace dimeq {

std::string_view exc_group_name(ExcGroup g) {
  return g == ExcGroup::E6 ? "E6" : "E7";
}

ExcGroup parse_exc_group(std::string_view name) {
  if (name == "E6" || name == "e6") return ExcGroup::E6;
  if (name == "E7" || name == "e7") return ExcGroup::E7;
  throw std::invalid_argument("unknown exceptional group: " + std::string(name));
}

ExceptionalTable ExceptionalTable::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("orbit fixture: ") + e.what());
  }
  ExceptionalTable table;
  table.version_ = doc.at("version").get<int>();
  for (const auto& entry : doc.at("orbits")) {
    ExceptionalOrbit o;
    o.group = parse_exc_group(entry.at("group").get<std::string>());
    o.label = entry.at("label").get<std::string>();
    o.dim = entry.at("dim").get<int>();
    o.anchored = entry.at("anchored").get<bool>();
    o.greater_than = entry.at("greater_than").get<std::vector<std::string>>();
    if (o.dim % 2 != 0)
      throw std::invalid_argument("orbit fixture: odd dimension for " + o.label);
    (o.group == ExcGroup::E6 ? table.e6_ : table.e7_).push_back(std::move(o));
  }
  // Cross-reference and closure sanity.
  for (const auto* list : {&table.e6_, &table.e7_}) {
    for (const auto& o : *list) {
      for (const auto& below : o.greater_than) {
        auto it = std::find_if(list->begin(), list->end(),
                               [&](const ExceptionalOrbit& b) { return b.label == below; });
        if (it == list->end())
          throw std::invalid_argument("orbit fixture: unknown label " + below +
                                      " below " + o.label);
        if (it->dim >= o.dim)
          throw std::invalid_argument("orbit fixture: closure order violates dimension at " +
                                      o.label + " > " + below);
      }
    }
  }
  return table;
}

const ExceptionalTable& ExceptionalTable::instance() {
  static const ExceptionalTable table = parse(detail::kOrbitsExceptionalJson);
  return table;
}

std::span<const ExceptionalOrbit> ExceptionalTable::all(ExcGroup g) const {
  return g == ExcGroup::E6 ? e6_ : e7_;
}

bool ExceptionalTable::contains(ExcGroup g, std::string_view label) const {
  auto list = all(g);
  return std::any_of(list.begin(), list.end(),
                     [&](const ExceptionalOrbit& o) { return o.label == label; });
}

const ExceptionalOrbit& ExceptionalTable::at(ExcGroup g, std::string_view label) const {
  for (const ExceptionalOrbit& o : all(g))
    if (o.label == label) return o;
  throw std::out_of_range("unknown " + std::string(exc_group_name(g)) + " orbit label: " +
                          std::string(label));
}

bool ExceptionalTable::greater(ExcGroup g, std::string_view a, std::string_view b) const {
  const ExceptionalOrbit& oa = at(g, a);
  at(g, b);  // validate
  return std::find(oa.greater_than.begin(), oa.greater_than.end(), b) !=
         oa.greater_than.end();
}

std::vector<const ExceptionalOrbit*> ExceptionalTable::above(ExcGroup g,
                                                             std::string_view base) const {
  at(g, base);
  std::vector<const ExceptionalOrbit*> out;
  for (const ExceptionalOrbit& o : all(g))
    if (greater(g, o.label, base)) out.push_back(&o);
  std::sort(out.begin(), out.end(), [](const ExceptionalOrbit* a, const ExceptionalOrbit* b) {
    if (a->dim != b->dim) return a->dim < b->dim;
    return a->label < b->label;
  });
  return out;
}

OrbitLabel OrbitLabel::classical(ClassicalFamily family, Partition p) {
  if (!is_valid(p, family))
    throw std::invalid_argument("orbit partition " + p.to_string() +
                                " is not valid for the family");
  OrbitLabel o;
  o.classical_ = true;
  o.family_ = family;
  o.partition_ = std::move(p);
  return o;
}

OrbitLabel OrbitLabel::exceptional(ExcGroup g, std::string_view label) {
  const ExceptionalOrbit& entry = ExceptionalTable::instance().at(g, label);
  OrbitLabel o;
  o.classical_ = false;
  o.group_ = g;
  o.label_ = entry.label;
  o.exc_dim_ = entry.dim;
  return o;
}

const ClassicalFamily& OrbitLabel::family() const {
  if (!classical_) throw std::logic_error("exceptional orbit has no classical family");
  return family_;
}

const Partition& OrbitLabel::partition() const {
  if (!classical_) throw std::logic_error("exceptional orbit has no partition");
  return partition_;
}

ExcGroup OrbitLabel::group() const {
  if (classical_) throw std::logic_error("classical orbit has no exceptional group");
  return group_;
}

const std::string& OrbitLabel::label() const {
  if (classical_) throw std::logic_error("classical orbit has no Bala-Carter label");
  return label_;
}

std::string OrbitLabel::to_string() const {
  return classical_ ? partition_.to_string() : label_;
}

bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
  if (a.classical_ != b.classical_) return false;
  if (a.classical_)
    return a.family_.tag == b.family_.tag && a.family_.ambient == b.family_.ambient &&
           a.partition_ == b.partition_;
  return a.group_ == b.group_ && a.label_ == b.label_;
}

bool operator<(const OrbitLabel& a, const OrbitLabel& b) {
  auto key = [](const OrbitLabel& o) {
    return std::tuple(o.classical_ ? 0 : 1,
                      o.classical_ ? static_cast<int>(o.family_.tag) : static_cast<int>(o.group_),
                      o.classical_ ? o.family_.ambient : o.exc_dim_);
  };
  if (key(a) != key(b)) return key(a) < key(b);
  if (a.classical_) return a.partition_ < b.partition_;
  return a.label_ < b.label_;
}

int classical_orbit_dim(const Partition& p, const ClassicalFamily& family) {
  if (!is_valid(p, family))
    throw std::invalid_argument("classical_orbit_dim: partition not valid for family");
  const Partition s = transpose(p);
  long long sq = 0;
  for (int x : s.parts()) sq += static_cast<long long>(x) * x;
  int odd = 0;
  for (int x : p.parts())
    if (x % 2 != 0) ++odd;
  long long dim = 0;
  switch (family.tag) {
    case FamilyTag::GL: {
      const long long n = family.ambient;
      dim = n * n - sq;
      break;
    }
    case FamilyTag::GSp: {
      const long long n_cap = family.ambient / 2;
      dim = 2 * n_cap * n_cap + n_cap - sq / 2 - odd / 2;
      break;
    }
    case FamilyTag::GSO: {
      const long long m_cap = family.ambient;
      dim = (m_cap * m_cap - m_cap) / 2 - (sq - odd) / 2;
      break;
    }
  }
  return static_cast<int>(dim);
}

int orbit_dim(const OrbitLabel& o) {
  if (o.is_classical()) return classical_orbit_dim(o.partition(), o.family());
  return ExceptionalTable::instance().at(o.group(), o.label()).dim;
}

int half_dim(const OrbitLabel& o) { return orbit_dim(o) / 2; }

bool strictly_greater(const OrbitLabel& a, const OrbitLabel& b) {
  if (a.is_classical() != b.is_classical())
    throw std::invalid_argument("orbit comparison across different groups");
  if (a.is_classical()) {
    if (a.family().tag != b.family().tag || a.family().ambient != b.family().ambient)
      throw std::invalid_argument("orbit comparison across different groups");
    return strictly_dominates(a.partition(), b.partition());
  }
  if (a.group() != b.group())
    throw std::invalid_argument("orbit comparison across different groups");
  return ExceptionalTable::instance().greater(a.group(), a.label(), b.label());
}

int contribution(const OrbitLabel& base, const OrbitLabel& orbit) {
  if (!strictly_greater(orbit, base))
    throw std::invalid_argument("contribution requires an orbit strictly above the base");
  return half_dim(orbit) - half_dim(base);
}

}  // namespace dimeq
