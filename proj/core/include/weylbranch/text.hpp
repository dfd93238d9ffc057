/*
  text.hpp — the textual syntaxes of the command-line surface.

  Roots use the epsilon-expression grammar  eK | 2eK | eK+eL | eK-eL  (K < L);
  weights use comma-separated fundamental coordinates ("0,1,0"); current
  weights use label:coords pairs separated by semicolons ("p1:0,1,0;p2:1,0,0").
*/
#pragma once

#include "weylbranch/root_system.hpp"

#include <map>
#include <string>
#include <vector>

namespace weylbranch {

const RootSystem& parse_system(const std::string& s);      // "B3"

Weight parse_root_expr(const RootSystem& rs, const std::string& s);
std::vector<Weight> parse_root_list(const RootSystem& rs, const std::string& s);
// renders a positive root back into the grammar above
std::string render_root_eps(const RootSystem& rs, const Weight& root);
// display form for arbitrary weights ("e1+e2", "(e1+e2+e3)/2", "0")
std::string render_weight_eps(const RootSystem& rs, const Weight& w);

std::vector<Int> parse_fund_coords(const std::string& s);
std::string render_fund_coords(std::span<const Int> coords);

std::map<std::string, std::vector<Int>> parse_current_weight_entries(const std::string& s);
std::string render_current_weight_entries(const std::map<std::string, std::vector<Int>>& entries);

} // namespace weylbranch
