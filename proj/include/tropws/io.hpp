#pragma once

#include <string>

#include "tropws/classes.hpp"
#include "tropws/fan.hpp"
#include "tropws/semistable.hpp"

namespace trop {

std::string serialize_matrix(const IMat& m);
std::string serialize_polytope(const LatticePolytope& p);
std::string serialize_points(const MonomialSupport& a);
std::string serialize_fan(const Fan& f);
std::string serialize_cycle(const TropicalCycle& c);
std::string serialize_class(const TropicalClass& a);
std::string serialize_grading(const TropGrading& g);
std::string serialize_pair(const SemistablePair& p);

IMat parse_matrix(const std::string& text);
LatticePolytope parse_polytope(const std::string& text);
MonomialSupport parse_points(const std::string& text);
Fan parse_fan(const std::string& text);
TropicalCycle parse_cycle(const std::string& text);
TropicalClass parse_class(const std::string& text);
TropGrading parse_grading(const std::string& text);
SemistablePair parse_pair(const std::string& text);

// request = matrix block + cycle block (the oracle protocol)
std::string serialize_oracle_request(const IMat& projection, const TropicalCycle& c);
void parse_oracle_request(const std::string& text, IMat& projection, TropicalCycle& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// stable FNV-1a 64 content digest, hex
std::string digest(const std::string& content);

// first token of a file: matrix, polytope, points, fan, tropical-cycle, ...
std::string detect_kind(const std::string& text);

}  // namespace trop
