#pragma once

#include <braidkit/dynnikov.hpp>
#include <braidkit/gridnf.hpp>
#include <braidkit/oracle.hpp>
#include <braidkit/simple.hpp>

#include <nlohmann/json.hpp>

// JSON encodings. Simple braids are permutation image arrays:
//   {"n":4,"delta_exp":-2,"factors":[[2,1,4,3],[2,4,3,1],[4,1,3,2],[2,1,3,4]]}
//   {"n":4,"den":[[2,3,1,4],[3,4,1,2]],"num":[[4,1,3,2],[2,1,3,4]]}
namespace braidkit {

void to_json(nlohmann::json& j, const SimpleBraid& s);
SimpleBraid simple_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const GreedyNF& nf);
void from_json(const nlohmann::json& j, GreedyNF& nf);

void to_json(nlohmann::json& j, const SymmetricNF& nf);
void from_json(const nlohmann::json& j, SymmetricNF& nf);

/// A plain array of integers; entries beyond 64 bits are written as strings.
void to_json(nlohmann::json& j, const DynnikovCoords& c);
void from_json(const nlohmann::json& j, DynnikovCoords& c);

void to_json(nlohmann::json& j, const FuzzReport& report);

}  // namespace braidkit
