#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "wgen/envmatrix.hpp"
#include "wgen/generators.hpp"
#include "wgen/lax.hpp"
#include "wgen/centralizer.hpp"
#include "wgen/pyramid.hpp"
#include "wgen/uea.hpp"
#include "wgen/verify.hpp"

namespace wgen {

using Json = nlohmann::ordered_json;

// Rationals are "p/q" (or "p") strings. Monomials are lists of [i, j, exponent] with
// consecutive equal factors merged; terms come in the canonical monomial order.
Json to_json(const Rational& q);
Json to_json(const EnvElement& x);
Json to_json(const ZSeries& s);
Json to_json(const EnvMatrix& m);
Json to_json(const Pyramid& p);
Json to_json(const CentralizerBasis& b);
Json to_json(const GeneratorSet& gs);
Json to_json(const LaxOperator& l);
Json to_json(const CheckReport& r);

Rational rational_from_json(const Json& j);
EnvElement env_element_from_json(const Json& j);
ZSeries zseries_from_json(const Json& j);
EnvMatrix env_matrix_from_json(const Json& j);
Pyramid pyramid_from_json(const Json& j);
// Centralizer elements are rebuilt from the pyramid and matched by (source, target, ell).
GeneratorSet generator_set_from_json(const Json& j);

bool same_generator_sets(const GeneratorSet& a, const GeneratorSet& b);

// Human readable listings in e_{ij} / z notation.
std::string render(const EnvMatrix& m);
std::string render(const GeneratorSet& gs);
std::string render(const CentralizerBasis& b);

}  // namespace wgen
