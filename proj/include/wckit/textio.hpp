#pragma once

#include <string>
#include <vector>

#include "wckit/brauer_fibration.hpp"
#include "wckit/cohomology.hpp"
#include "wckit/elliptic_ff.hpp"
#include "wckit/real_curves.hpp"
#include "wckit/torsor_model.hpp"

namespace wc {

std::vector<std::string> split(const std::string& text, char sep);
int64_t parse_int(const std::string& text);
std::vector<int64_t> parse_int_list(const std::string& text, char sep = ',');

/// "wcurve p a b"
WeierstrassCurve parse_wcurve(const std::string& spec);

/// "cubic p c1 ... c10", coefficients in the lexicographic monomial order
/// x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3
PlaneCubic parse_cubic(const std::string& spec);

/// "rcurve a=<num/den> b=<num/den>"
RationalCurve parse_rcurve(const std::string& spec);

/// "wc n=<n> aut=<comma-separated multipliers>"
WCModel parse_wcmodel(const std::string& spec);

/// "brmodel n=<n> br=<orders> brs=<generator tuples, ;-separated>"
SplitBrauerModel parse_brmodel(const std::string& spec);

/// group: trivial | cyclic:<k> | klein4 | sym3 | table:<rows ;-sep, entries ,-sep>
FiniteGroup parse_group(const std::string& spec);

/// action given a group and module:
///   trivial | mult:<u per element, comma-sep> | mat:<elem;...> where each
///   elem lists generator images separated by '|', each image a comma tuple
GModule parse_gmodule(const std::string& group_spec, const std::string& module_spec,
                      const std::string& action_spec);

/// one module element per group element, ';'-separated comma tuples
std::vector<int64_t> parse_module_values(const FiniteAbelianGroup& module,
                                         const std::string& values_spec, size_t expected);

} // namespace wc
