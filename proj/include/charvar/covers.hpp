// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "charvar/chars.hpp"
#include "charvar/polyring.hpp"

namespace chv {

// Ring homomorphism given by the images of the source variables.
struct RingMap {
  std::string name;
  VariableSet source, target;
  std::vector<Polynomial> images;  // one per source variable, over target

  Polynomial apply(const Polynomial& p) const { return p.substitute(images); }
  std::vector<cplx> evaluate(const std::vector<cplx>& target_values) const;
  std::string json() const;
};

// y1 -> y1, y2 <-> y123, y3 -> y3, y12 <-> y23, y13 -> y1 y3 - y13 - y12 y23 + y123 y2
const RingMap& deck_involution_map();
Polynomial deck_involution_f3(const Polynomial& p);  // reduced mod phi
CharacterF3 deck_involution_f3(const CharacterF3& c);

const RingMap& embed_r2_in_r3();   // F3 coordinates -> polynomials in {x,y,z}
const RingMap& cover_c02_to_s04(); // {a..z} -> Q[u,v,w]
const RingMap& cover_c11_to_s12(); // {a,b,u,...} -> Q[p,q,r]

const RingMap& ring_map_by_name(const std::string& name);  // deck|embed|c02s04|c11s12

// The word substitutions realising each map, as (source variable -> word
// in the generators of the cover group). Used by tests as an independent
// route to the tables.
struct WordImage {
  std::string variable;
  std::string word;  // in the cover group's letters
};
std::vector<WordImage> cover_words(const std::string& name);

}  // namespace chv
