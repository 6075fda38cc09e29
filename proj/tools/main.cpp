#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "commands.hpp"
#include "render.hpp"
#include "smod/errors.hpp"

using smod::Int;
namespace cli = smod::cli;

int main(int argc, char** argv) {
  CLI::App app{"Singular moduli, class invariants and the k_210 pipeline"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  int prec = 50;
  std::optional<int> tol;
  app.add_option("--format", format, "text, tsv or json")->check(CLI::IsMember({"text", "tsv", "json"}));
  auto* prec_opt = app.add_option("--prec", prec, "working precision in decimal digits")->envname("SMOD_PREC");
  prec_opt->check(CLI::Range(10, 5000));
  app.add_option("--tol", tol, "override the residual tolerance, as a power of ten (e.g. -30)");

  std::string disc = "-840", n = "105", m = "210", a = "1", b = "0", c = "210", delta = "-3";

  auto* forms = app.add_subcommand("forms", "reduced forms and class number");
  forms->add_option("--disc", disc, "discriminant")->required();

  auto* g2n = app.add_subcommand("g2n", "Weber's product for g_{2n}");
  g2n->add_option("--n", n, "n, with 2n twice an odd squarefree number")->required();

  auto* kn = app.add_subcommand("kn", "singular modulus k_n");
  kn->add_option("--n", n, "n")->required();

  auto* tables = app.add_subcommand("tables", "Jacobi table, coefficient differences, surviving sums");
  tables->add_option("--m", m, "determinant m");

  auto* jpoly = app.add_subcommand("jpoly", "class polynomial of j");
  jpoly->add_option("--disc", disc, "discriminant (default -840)");

  auto* verify = app.add_subcommand("verify", "numerical verifications");
  verify->require_subcommand(1);
  auto* v_ratio = verify->add_subcommand("ratio", "F(1-alpha)/F(alpha) = sqrt(n)");
  v_ratio->add_option("--n", n, "n")->required();
  auto* v_g = verify->add_subcommand("formula-g", "Kronecker's formula G for the pair (A, C)");
  v_g->add_option("--a", a, "A")->required();
  v_g->add_option("--c", c, "C")->required();
  auto* v_grenz = verify->add_subcommand("grenzformel", "limit formula for A X^2 + 2B XY + C Y^2");
  v_grenz->add_option("--a", a, "A");
  v_grenz->add_option("--b", b, "B");
  v_grenz->add_option("--c", c, "C");
  auto* v_diri = verify->add_subcommand("dirichlet", "finite-sum L(1, chi) against the class number formula");
  v_diri->add_option("--delta", delta, "fundamental discriminant")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsage;
  }

  try {
    cli::Outcome out;
    if (*forms) out = cli::forms(Int(disc));
    else if (*g2n) out = cli::g2n(Int(n), prec, tol);
    else if (*kn) out = cli::kn(Int(n), prec, tol);
    else if (*tables) out = cli::tables(Int(m));
    else if (*jpoly) out = cli::jpoly(Int(disc), prec_opt->count() ? prec : 300);
    else if (*v_ratio) out = cli::verify_ratio(Int(n), prec, tol);
    else if (*v_g) out = cli::verify_formula_g(Int(a), Int(c), prec, tol);
    else if (*v_grenz) out = cli::verify_grenzformel(Int(a), Int(b), Int(c), prec, tol);
    else if (*v_diri) out = cli::verify_dirichlet(Int(delta), prec, tol);
    std::cout << cli::render(out.data, cli::parse_format(format));
    return out.exit_code;
  } catch (const std::invalid_argument& e) {  // DomainError and malformed integers
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const smod::PrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kResidual;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return cli::kInternal;
  }
}
