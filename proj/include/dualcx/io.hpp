#pragma once

#include <string>

#include <json.hpp>

#include "dualcx/dual_complex.hpp"
#include "dualcx/newton.hpp"
#include "dualcx/polyhedral.hpp"
#include "dualcx/topology.hpp"

namespace dualcx::io {

using Json = nlohmann::json;

/** Integers that fit in a long are written as JSON numbers, larger ones as decimal strings. */
Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Integer integer_from_json(const Json& j, const std::string& field);
IntVector vector_from_json(const Json& j, const std::string& field);

/**
 * Support file: {"n_vars": int, "support": [[int,...],...], "coefficients": ["p/q",...]?}.
 * Errors name the offending field; JSON syntax errors carry the parser's position.
 */
Support parse_support(const std::string& text);
Support support_from_json(const Json& j);
Json to_json(const Support& s);

Json to_json(const NewtonFace& f);
Json to_json(const Fan& f);
Json to_json(const VarchenkoFan& v);
Json to_json(const HomologyProfile& p);

/**
 * {"vertices":[{"id":int,"ray":[int,...]?}], "cells":[{"id":int,"dim":int,"verts":[int,...],"copy":int}]}.
 * Keys sorted, vertices by id, cells by (dim, tuple, copy).
 */
Json to_json(const DualComplex& c);
std::string emit_json(const DualComplex& c);

/** One node per vertex, one undirected edge per 1-cell copy, higher cells as comments. */
std::string emit_dot(const DualComplex& c);

/**
 * Reads a complex keeping its ids; boundaries are recomputed from the tuples
 * and vertices without a 0-cell receive one. Throws InvalidArgument if the
 * result does not validate.
 */
DualComplex complex_from_json(const Json& j);
DualComplex parse_complex(const std::string& text);

Json to_json(const DeletionScript& s);
DeletionScript script_from_json(const Json& j);

Json parse_document(const std::string& text);
std::string read_file(const std::string& path);

}  // namespace dualcx::io
