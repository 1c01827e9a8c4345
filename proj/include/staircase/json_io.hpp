#pragma once

#include <json.hpp>

#include "staircase/dp.hpp"
#include "staircase/search.hpp"
#include "staircase/witness.hpp"

namespace staircase {

// Key order is part of the output contract, so everything goes through
// ordered_json.
using Json = nlohmann::ordered_json;

enum class MatrixFormat { plain, json };

/// Plain text or the single-line {"n":..,"N":..,"rows":[..]} form.
std::string serialize_matrix(const Matrix& m, MatrixFormat format);

Json json_matrix(const Matrix& m);
Matrix matrix_from_json(const Json& j);  // throws FormatError

Json json_position(Position p);
Json json_staircase(const Staircase& s);
Json json_profile(const StProfile& p);
Json json_sigma_witness(const SigmaWitness& w);
Json json_trace(const WitnessTrace& t);

/// Search report without wall time, so identical runs serialize identically.
Json json_report(const SearchReport& r);
Json json_probe(const TwoTurnProbe& p);

const char* witness_case_name(WitnessCase c);

}  // namespace staircase
