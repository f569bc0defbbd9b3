#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "nattree/bijections.hpp"
#include "nattree/nat.hpp"
#include "nattree/natdk.hpp"
#include "nattree/perm.hpp"
#include "nattree/poly2.hpp"
#include "nattree/series.hpp"
#include "nattree/trees.hpp"

namespace nattree {

using Json = nlohmann::ordered_json;

// Errors in the from_json family are std::invalid_argument with a short
// description of the offending field.

Json to_json(const BinaryTree& t);
BinaryTree tree_from_json(const Json& j);

/// The shape may also be given as a tree string.
Json to_json(const Nat& t);
Nat nat_from_json(const Json& j);

Json to_json(const Integer& x);
Json to_json(const Rational& x);

/// [e0, e1, coeff] triples in graded order.
Json to_json(const QPoly2& p);
Json to_json(const ParamPoly& p);
QPoly2 qpoly_from_json(const Json& j);

Json to_json(const PermSum& s);

/// Letters are strings such as "r4" and "b11".
std::string to_string(const Letter& l);
Letter parse_letter(const std::string& s);
std::string to_string(const std::vector<Letter>& w);
Json to_json(const WordPair& wp);
WordPair words_from_json(const Json& j);

Json to_json(const NotTree& o);
NotTree not_from_json(const Json& j);

Json to_json(const FourTuple& ft);
FourTuple four_tuple_from_json(const Json& j);

Json to_json(const DkNat& t);
/// With validate = false only the structure is checked.
DkNat dk_from_json(const Json& j, bool validate = true);
Json to_json(const GeoNat& g);
GeoNat geo_from_json(const Json& j);

Json to_json(const NatStats& s);

/// Rows: exponents, numerator, denominator.
void write_csv(std::ostream& os, const Egf& s);
/// Rows: exponents, alpha exponent, beta exponent, numerator, denominator.
void write_csv(std::ostream& os, const ParamEgf& s);

/// One JSON object per nonzero coefficient, with its factorial-normalized count.
void write_json_lines(std::ostream& os, const Egf& s);
void write_json_lines(std::ostream& os, const ParamEgf& s);

std::string to_dot(const Nat& t);
std::string to_dot(const DkNat& t);
std::string to_dot(const NotTree& o);

/// Indented outline, one vertex per line.
std::string to_text(const Nat& t);
std::string to_text(const DkNat& t);
std::string to_text(const NotTree& o);

}  // namespace nattree
