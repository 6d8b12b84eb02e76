#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hg/color.hpp"
#include "hg/fine.hpp"

namespace hg {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// split on sep outside parentheses; pieces are trimmed
std::vector<std::string> split_top(const std::string& text, char sep);
std::vector<Cyc> parse_scalar_list(const std::string& text, const Ctx& ctx);
// the field for a twisted algebra on this lambda text (conductor chosen automatically unless given)
Ctx twisted_context(const std::string& lambda_text, std::optional<long> conductor);
// "l,s,r;betas;alphas"
FineTwistedParams parse_params(const std::string& text, const Ctx& ctx);

Json vect_json(const Algebra& A, const Vect& v);
Vect vect_from_json(const Algebra& A, const Json& j);
Json mat_json(const Mat& m);
Json algebra_json(const Algebra& A);
// accepts {"heisenberg": k}, {"super": [k,m]}, {"twisted": [...]} or explicit labels/parity/brackets
Algebra algebra_from_json(const Json& j);
Json grading_json(const Grading& G);
Grading grading_from_json(const Json& j);
Json params_json(const FineTwistedParams& p);

// {"group", "g0", "eps", "dims", "conductor"}
ColorType color_type_from_json(const Json& j);
Json color_type_json(const ColorType& t);

// the command line front end; returns the exit status
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hg
