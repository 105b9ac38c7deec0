#ifndef NPSPREAD_JSON_IO_HPP
#define NPSPREAD_JSON_IO_HPP

#include <json.hpp>

#include "npspread/monomial.hpp"
#include "npspread/polyhedral.hpp"
#include "npspread/spread.hpp"

// JSON encodings used by the CLI. Rationals are serialized as exact "p" or
// "p/q" strings; every report type round-trips through its from_json.

namespace npspread {

using nlohmann::json;

json rational_to_json(const Rational& value);
Rational rational_from_json(const json& j);

json qvector_to_json(const QVector& v);
QVector qvector_from_json(const json& j);

void to_json(json& j, const Hyperplane& h);
void from_json(const json& j, Hyperplane& h);
void to_json(json& j, const Halfspace& h);
void from_json(const json& j, Halfspace& h);
void to_json(json& j, const HRep& h);
void from_json(const json& j, HRep& h);
void to_json(json& j, const VRep& v);
void from_json(const json& j, VRep& v);
void to_json(json& j, const Face& f);
void from_json(const json& j, Face& f);
void to_json(json& j, const NewtonBody& b);
void from_json(const json& j, NewtonBody& b);
void to_json(json& j, const BoundCertificate& c);
void from_json(const json& j, BoundCertificate& c);
void to_json(json& j, const SpreadBound& b);
void from_json(const json& j, SpreadBound& b);
void to_json(json& j, const SpreadReport& r);
void from_json(const json& j, SpreadReport& r);
void to_json(json& j, const BasicConditions& c);
void from_json(const json& j, BasicConditions& c);
void to_json(json& j, const BasicReport& r);
void from_json(const json& j, BasicReport& r);
void to_json(json& j, const ReductionReport& r);
void from_json(const json& j, ReductionReport& r);
void to_json(json& j, const QMatrix& m);
void from_json(const json& j, QMatrix& m);

} // namespace npspread

#endif
