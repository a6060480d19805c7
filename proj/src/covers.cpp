// SPDX-License-Identifier: Apache-2.0
#include "charvar/covers.hpp"

#include <map>

#include "charvar/error.hpp"
#include "json.hpp"

namespace chv {

namespace {

RingMap make_map(std::string name, const VariableSet& src, const VariableSet& tgt,
                 const std::map<std::string, std::string>& table) {
  RingMap m{std::move(name), src, tgt, {}};
  for (const auto& v : src.names()) {
    auto it = table.find(v);
    if (it == table.end()) throw std::logic_error("ring map table misses " + v);
    m.images.push_back(Polynomial::parse(tgt, it->second));
  }
  return m;
}

}  // namespace

std::vector<cplx> RingMap::evaluate(const std::vector<cplx>& tv) const {
  std::vector<cplx> out;
  for (const auto& p : images) out.push_back(p.evaluate(tv));
  return out;
}

std::string RingMap::json() const {
  nlohmann::json j;
  j["name"] = name;
  j["source"] = source.names();
  j["target"] = target.names();
  for (std::size_t i = 0; i < images.size(); ++i) j["images"][source[i]] = images[i].str();
  return j.dump();
}

const RingMap& deck_involution_map() {
  static const RingMap m = make_map("deck", vars_f3(), vars_f3(),
                                    {{"x1", "x1"},
                                     {"x2", "x123"},
                                     {"x3", "x3"},
                                     {"x12", "x23"},
                                     {"x13", "x1*x3 - x13 - x12*x23 + x123*x2"},
                                     {"x23", "x12"},
                                     {"x123", "x2"}});
  return m;
}

Polynomial deck_involution_f3(const Polynomial& p) {
  return reduce_mod_phi(deck_involution_map().apply(p));
}

CharacterF3 deck_involution_f3(const CharacterF3& c) {
  auto v = deck_involution_map().evaluate(c.seven());
  std::vector<cplx> w = v;
  cplx t132 = f3_sum().evaluate(w) - v[6];
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], t132};
}

const RingMap& embed_r2_in_r3() {
  static const RingMap m = make_map("embed", vars_f3(), vars_f2(),
                                    {{"x1", "x^2 - 2"},
                                     {"x2", "z"},
                                     {"x3", "y^2 - 2"},
                                     {"x12", "x*y - z"},
                                     {"x13", "x*y*z - x^2 - y^2 + 2"},
                                     {"x23", "x*y - z"},
                                     {"x123", "z"}});
  return m;
}

const RingMap& cover_c02_to_s04() {
  static const RingMap m = make_map(
      "c02s04", vars_s04(), vars_uvw(),
      {{"a", "w"},
       {"b", "u*v - w"},
       {"c", "u*v - w"},
       {"d", "w"},
       {"x", "u^2 - 2"},
       {"y", "u^2 + v^2 + w^2 - u*v*w - 2"},
       // tr(V U^-2 V U^2)
       {"z", "-u^4 + u^3*v*w - u^2*v^2 - u^2*w^2 + 4*u^2 + v^2 - 2"}});
  return m;
}

const RingMap& cover_c11_to_s12() {
  static const RingMap m = make_map("c11s12", vars_s12(), vars_pqr(),
                                    {{"a", "2 - p^2 - q^2 + p*q*r"},
                                     {"b", "2 - p^2 - q^2 + p*q*r"},
                                     {"u", "r"},
                                     {"v", "q^2 - 2"},
                                     {"w", "p*(p*r - q) - r"},
                                     {"x", "p*q - r"},
                                     {"y", "p^2 - 2"},
                                     {"z", "r"}});
  return m;
}

const RingMap& ring_map_by_name(const std::string& name) {
  if (name == "deck") return deck_involution_map();
  if (name == "embed") return embed_r2_in_r3();
  if (name == "c02s04") return cover_c02_to_s04();
  if (name == "c11s12") return cover_c11_to_s12();
  throw UsageError("unknown ring map '" + name + "' (deck|embed|c02s04|c11s12)");
}

std::vector<WordImage> cover_words(const std::string& name) {
  if (name == "deck") {
    // Y1 = X, Y2 = (XYZ)^-1 ... as words in X, Y, Z
    const std::string y1 = "X", y2 = "zyx", y3 = "XYZyx";
    return {{"x1", y1},           {"x2", y2},           {"x3", y3},
            {"x12", y1 + y2},     {"x13", y1 + y3},     {"x23", y2 + y3},
            {"x123", y1 + y2 + y3}};
  }
  if (name == "embed") {
    const std::string y1 = "XX", y2 = "xy", y3 = "YY";
    return {{"x1", y1},           {"x2", y2},           {"x3", y3},
            {"x12", y1 + y2},     {"x13", y1 + y3},     {"x23", y2 + y3},
            {"x123", y1 + y2 + y3}};
  }
  if (name == "c02s04") {
    // A = UV, B = V^-1 U, C = U^-2 V U, D = U^-1 V^-1 (letters U, V)
    const std::string A = "UV", B = "vU", C = "uuVU", D = "uv";
    return {{"a", A},     {"b", B},     {"c", C},    {"d", D},
            {"x", A + B}, {"y", B + C}, {"z", C + A}};
  }
  if (name == "c11s12") {
    // U = PQ, X = QP^-1, Y = P^2 (letters P, Q)
    const std::string U = "PQ", X = "Qp", Y = "PP";
    return {{"a", U + X + Y}, {"b", U + Y + X}, {"u", U},     {"v", U + X},
            {"w", U + Y},     {"x", X},         {"y", Y},     {"z", X + Y}};
  }
  throw UsageError("unknown ring map '" + name + "'");
}

}  // namespace chv
