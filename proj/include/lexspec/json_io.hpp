#pragma once

#include "json.hpp"

#include "lexspec/lex_join.hpp"
#include "lexspec/lex_power.hpp"
#include "lexspec/oracle.hpp"
#include "lexspec/spectrum.hpp"
#include "lexspec/walk_matrix.hpp"

namespace lexspec {

using Json = nlohmann::json;

/// Exact integers serialize as JSON numbers while they fit int64 and as
/// decimal strings beyond that.
Json to_json(const BigInt& v);
Json to_json(const IntPoly& p);
Json to_json(const Spectrum& s);
Json to_json(const MainPolynomial& mp);
Json to_json(const CorollaryReport& r);
Json to_json(const MultisetDiff& d);
Json to_json(const PowerSpectrum& ps);

std::string main_flag_name(MainFlag f);

} // namespace lexspec
