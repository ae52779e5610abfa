#include "mqm/halfspace.hpp"

namespace mqm {

std::string to_string(Relation r) {
  switch (r) {
  case Relation::Equal:
    return "equal";
  case Relation::Complement:
    return "complement";
  case Relation::Transverse:
    return "transverse";
  case Relation::HInK:
    return "h_in_k";
  case Relation::KInH:
    return "k_in_h";
  case Relation::Disjoint:
    return "h_in_complement_k";
  case Relation::Covering:
    return "complement_h_in_k";
  }
  return "?";
}

Relation swapped(Relation r) {
  switch (r) {
  case Relation::HInK:
    return Relation::KInH;
  case Relation::KInH:
    return Relation::HInK;
  default:
    return r;
  }
}

Relation with_complement(Relation r) {
  switch (r) {
  case Relation::Equal:
    return Relation::Complement;
  case Relation::Complement:
    return Relation::Equal;
  case Relation::Transverse:
    return Relation::Transverse;
  case Relation::HInK: // h < k, so h and k-bar are disjoint
    return Relation::Disjoint;
  case Relation::KInH: // k < h, so k-bar contains h-bar: h u k-bar = all
    return Relation::Covering;
  case Relation::Disjoint: // h < k-bar
    return Relation::HInK;
  case Relation::Covering: // h-bar < k, so k-bar < h
    return Relation::KInH;
  }
  return r;
}

} // namespace mqm
