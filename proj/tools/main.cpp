// loophopf: exact Hopf-algebra calculus on truncated loop path coalgebras.
//
// Exit codes: 0 success / all axioms pass; 1 verification failure;
// 2 invalid input (parse error or violated precondition).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loophopf/analysis.hpp"
#include "loophopf/combinat.hpp"
#include "loophopf/endo.hpp"
#include "loophopf/families.hpp"
#include "loophopf/table_io.hpp"
#include "loophopf/verify.hpp"

namespace {

using namespace loophopf;

GfPtr make_field(Prime p, unsigned ext) {
  if (ext < 1 || ext > 16) throw std::invalid_argument("--ext must be between 1 and 16");
  if (ext == 1) return Gf::make(p, 1);
  try {
    return Gf::make(p, ext);
  } catch (const std::invalid_argument&) {
    // No built-in modulus for this (p, ext): search for the smallest one.
    return Gf::make(p, ext, find_irreducible(p, ext));
  }
}

LambdaSeq seq_from_indices(const GfPtr& field, const std::vector<std::uint64_t>& indices) {
  std::vector<Fe> v;
  v.reserve(indices.size());
  for (auto i : indices) {
    if (i >= field->order()) throw std::invalid_argument("lambda index out of field range");
    v.push_back(field->element(i));
  }
  return LambdaSeq(field, std::move(v));
}

LambdaSeq restrict_seq(const LambdaSeq& s, std::size_t N) {
  auto v = s.entries();
  if (N >= 1 && v.size() > N - 1) v.resize(N - 1, s.field()->zero());
  return LambdaSeq(s.field(), std::move(v));
}

int run_binom(std::uint64_t p, std::uint64_t m, std::uint64_t n) {
  Prime prime(p);
  if (m < 1 || n < 1) throw std::invalid_argument("binom requires m, n >= 1");
  std::cout << "binom=" << lucas_binom(m + n, n, prime) << " carries=" << carry_count(m, n, prime)
            << "\n";
  std::cout << "legendre: nu(m!)=" << legendre_sum(m, prime) << " nu(n!)=" << legendre_sum(n, prime)
            << " nu((m+n)!)=" << legendre_sum(m + n, prime) << "\n";
  return 0;
}

int run_build(const std::string& family, bool has_p, std::uint64_t p, bool has_n, std::uint32_t n,
              bool has_d, std::uint32_t d, unsigned ext, const std::string& out) {
  MultTable table = [&] {
    if (family == "nc2") {
      if (has_p || has_n || has_d)
        throw std::invalid_argument("nc2 takes no --p/--n/--d (it is the fixed p = 2 example)");
      return build_nc2(make_field(Prime(2), ext));
    }
    if (!has_p || !has_n) throw std::invalid_argument(family + " requires --p and --n");
    Prime prime(p);
    GfPtr field = make_field(prime, ext);
    if (family == "ld") {
      if (!has_d) throw std::invalid_argument("ld requires --d");
      return build_Lnd(FamilyParams(prime, n, d), field);
    }
    if (has_d) throw std::invalid_argument("--d applies only to the ld family");
    return family == "graded" ? build_graded(prime, n, field) : build_dual_cyclic(prime, n, field);
  }();
  save_table(out, table);
  HopfReport report = verify_table(table);
  if (!report.hopf_ok()) {
    std::cerr << render(report);
    return 1;
  }
  return 0;
}

int run_verify(const std::string& path, bool want_report) {
  MultTable t = load_table(path);
  HopfReport report = verify_table(t);
  if (want_report || !report.hopf_ok()) std::cout << render(report);
  return report.hopf_ok() ? 0 : 1;
}

int run_classify(const std::string& path) {
  MultTable t = load_table(path);
  HopfReport report = verify_table(t);
  if (report.classification) {
    std::cout << report.classification->text() << "\n";
    return report.classification->kind == ClassKind::Family ? 0 : 1;
  }
  std::cout << "unclassified" << "\n";
  return 1;
}

int run_endo(std::uint64_t p, unsigned ext, bool has_bound, std::uint64_t bound,
             const std::vector<std::uint64_t>& lambda, bool has_apply, std::uint64_t apply_m,
             bool has_compose, const std::vector<std::uint64_t>& compose_with, bool do_invert) {
  Prime prime(p);
  GfPtr field = make_field(prime, ext);
  LambdaSeq f = seq_from_indices(field, lambda);
  std::size_t N = has_bound ? static_cast<std::size_t>(bound) : lambda.size() + 1;
  if (has_bound && N < 1) throw std::invalid_argument("--N must be at least 1");
  int modes = (has_apply ? 1 : 0) + (has_compose ? 1 : 0) + (do_invert ? 1 : 0);
  if (modes != 1)
    throw std::invalid_argument("choose exactly one of --apply, --compose, --invert");
  if (has_apply) {
    if (has_bound && apply_m >= N) throw std::invalid_argument("--apply index must be below N");
    std::cout << render(evaluate(f, apply_m)) << "\n";
  } else if (has_compose) {
    LambdaSeq g = seq_from_indices(field, compose_with);
    LambdaSeq h = compose(f, g);
    // On k-loop_N only the first N-1 coefficients are visible.
    std::cout << render(has_bound ? restrict_seq(h, N) : h) << "\n";
  } else {
    std::cout << render(invert(f, N)) << "\n";  // domain_error when lambda_1 = 0
  }
  return 0;
}

int run_antipode(const std::string& path) {
  MultTable t = load_table(path);
  HopfReport report = verify_table(t);
  if (!report.hopf_ok() || !report.antipode_matrix) {
    std::cerr << render(report);
    return 1;
  }
  for (std::size_t m = 0; m < t.dim(); ++m) {
    LoopElement image =
        apply_matrix(*report.antipode_matrix, LoopElement::basis(t.field(), t.dim(), m));
    std::cout << "S(a" << m << ") = " << render(image) << "\n";
  }
  return 0;
}

int run_integral(const std::string& path) {
  MultTable t = load_table(path);
  HopfReport report = verify_table(t);
  if (!report.hopf_ok()) {
    std::cerr << render(report);
    return 1;
  }
  if (!report.commutative.passed())
    throw std::invalid_argument("integral requires a commutative table");
  IntegralInfo info = integral(t);
  std::cout << "t = " << render(info.t) << ", eps(t) = " << render(info.t_counit)
            << ", dim ∫ = " << info.dim() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hopf-algebra calculus on truncated loop path coalgebras over GF(p^k)"};
  app.require_subcommand(1);

  std::uint64_t binom_p = 0, binom_m = 0, binom_n = 0;
  auto* binom_cmd = app.add_subcommand("binom", "Binomial vanishing data mod p");
  binom_cmd->add_option("--p", binom_p, "prime characteristic")->required();
  binom_cmd->add_option("--m", binom_m, "first summand (>= 1)")->required();
  binom_cmd->add_option("--n", binom_n, "second summand (>= 1)")->required();

  std::string build_family, build_out;
  std::uint64_t build_p = 0;
  std::uint32_t build_n = 0, build_d = 0;
  unsigned build_ext = 1;
  auto* build_cmd = app.add_subcommand("build", "Construct a family table and write it to a file");
  build_cmd->add_option("--family", build_family, "ld | graded | dual-cyclic | nc2")
      ->required()
      ->check(CLI::IsMember({"ld", "graded", "dual-cyclic", "nc2"}));
  build_cmd->add_option("--p", build_p, "prime characteristic");
  build_cmd->add_option("--n", build_n, "height exponent (dimension p^n)");
  build_cmd->add_option("--d", build_d, "Verschiebung exponent, 0 <= d <= n (ld only)");
  build_cmd->add_option("--ext", build_ext, "field extension degree k (default 1)");
  build_cmd->add_option("--out", build_out, "output table file")->required();

  std::string verify_path;
  bool verify_report = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check the Hopf axioms of a table file");
  verify_cmd->add_option("file", verify_path, "table file")->required();
  verify_cmd->add_flag("--report", verify_report, "always print the full report");

  std::string classify_path;
  auto* classify_cmd = app.add_subcommand("classify", "Name the L(n,d) class of a table file");
  classify_cmd->add_option("file", classify_path, "table file")->required();

  std::uint64_t endo_p = 0, endo_bound = 0, endo_apply = 0;
  unsigned endo_ext = 1;
  std::vector<std::uint64_t> endo_lambda, endo_compose;
  bool endo_invert = false;
  auto* endo_cmd = app.add_subcommand("endo", "Coalgebra endomorphism calculus on k-loop_N");
  endo_cmd->add_option("--p", endo_p, "prime characteristic")->required();
  endo_cmd->add_option("--ext", endo_ext, "field extension degree k (default 1)");
  endo_cmd->add_option("--N", endo_bound, "truncation bound (default: lambda length + 1)");
  endo_cmd->add_option("--lambda", endo_lambda, "comma-separated field-element indices")
      ->required()
      ->delimiter(',');
  endo_cmd->add_option("--apply", endo_apply, "print f(a_M)");
  endo_cmd->add_option("--compose", endo_compose, "compose with a second lambda sequence")
      ->delimiter(',');
  endo_cmd->add_flag("--invert", endo_invert, "print the inverse lambda sequence");

  std::string antipode_path;
  auto* antipode_cmd = app.add_subcommand("antipode", "Print the antipode of a table file");
  antipode_cmd->add_option("file", antipode_path, "table file")->required();

  std::string integral_path;
  auto* integral_cmd = app.add_subcommand("integral", "Print integral data of a table file");
  integral_cmd->add_option("file", integral_path, "table file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (binom_cmd->parsed()) return run_binom(binom_p, binom_m, binom_n);
    if (build_cmd->parsed())
      return run_build(build_family, build_cmd->count("--p") > 0, build_p,
                       build_cmd->count("--n") > 0, build_n, build_cmd->count("--d") > 0, build_d,
                       build_ext, build_out);
    if (verify_cmd->parsed()) return run_verify(verify_path, verify_report);
    if (classify_cmd->parsed()) return run_classify(classify_path);
    if (endo_cmd->parsed())
      return run_endo(endo_p, endo_ext, endo_cmd->count("--N") > 0, endo_bound, endo_lambda,
                      endo_cmd->count("--apply") > 0, endo_apply, endo_cmd->count("--compose") > 0,
                      endo_compose, endo_invert);
    if (antipode_cmd->parsed()) return run_antipode(antipode_path);
    if (integral_cmd->parsed()) return run_integral(integral_path);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // Internal construction failed its own verification.
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1)
}
