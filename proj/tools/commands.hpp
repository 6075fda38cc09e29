#pragma once

#include <json.hpp>
#include <optional>

#include "smod/types.hpp"

namespace smod::cli {

// Exit codes shared by every subcommand.
enum Exit : int { kOk = 0, kResidual = 1, kUsage = 2, kInternal = 3 };

struct Outcome {
  nlohmann::json data;
  int exit_code = kOk;
};

// Tolerances are powers of ten given by their exponent, e.g. -30.
Outcome forms(const Int& disc);
Outcome g2n(const Int& n, int digits, std::optional<int> tol);
Outcome kn(const Int& n, int digits, std::optional<int> tol);
Outcome tables(const Int& m);
Outcome jpoly(const Int& disc, int digits);
Outcome verify_ratio(const Int& n, int digits, std::optional<int> tol);
Outcome verify_formula_g(const Int& A, const Int& C, int digits, std::optional<int> tol);
Outcome verify_grenzformel(const Int& A, const Int& B, const Int& C, int digits, std::optional<int> tol);
Outcome verify_dirichlet(const Int& delta, int digits, std::optional<int> tol);

}  // namespace smod::cli
