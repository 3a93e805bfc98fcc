#pragma once

#include <string>

#include "adic/lift.hpp"

namespace adic {

// `vars t1 t2`, `vars *`, or `gens <poly>; <poly>; ...`.
AdicIdeal parse_ideal_spec(const std::string& spec, Domain d,
                           std::uint32_t degree_cap);

// Line-oriented module presentation:
//   field: Q            (or: field: Fp <p>)
//   ideal: vars t1 t2   (or: vars *, or: gens <poly>; ...)
//   gens: <rank>
//   rel: <poly>, <poly>, ...   (zero or more, one vector per line)
// Blank lines and lines starting with '#' are ignored.
ModulePtr parse_presentation(const std::string& text,
                             std::uint32_t degree_cap);
ModulePtr load_presentation(const std::string& path,
                            std::uint32_t degree_cap);

// A module system file: repeated blocks
//   level <i>:
//   <presentation lines>
//   psi: <poly>, ... ; <poly>, ...   (absent at level 0; rows split on ';')
AdicSystem parse_system(const std::string& text, std::uint32_t degree_cap);
AdicSystem load_system(const std::string& path, std::uint32_t degree_cap);

}  // namespace adic
