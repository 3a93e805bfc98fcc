#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "adic/polynomial.hpp"

namespace adic {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected,
               std::string found);

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Parses the polynomial expression grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := coeff | var | '(' expr ')'
//   var    := 't' nat
//   coeff  := int ('/' nat)?
// The result is canonical; printing and re-parsing is the identity.
Polynomial poly_parse(const std::string& text, Domain d = {});

// Comma- or space-separated list of expressions (module element coordinates).
std::vector<Polynomial> poly_parse_vector(const std::string& text, Domain d,
                                          char sep = ',');

}  // namespace adic
