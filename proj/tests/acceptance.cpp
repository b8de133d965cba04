// Acceptance gate: thirteen end-to-end criteria, one pass/fail line each.
//
// Criterion 9 is expected to fail and is reported as XFAIL: the published
// 4-dimensional non-commutative relations are mutually inconsistent (see the
// build_nc2 documentation), so no table can satisfy them.  An unexpected
// pass there fails the gate.
//
// Usage: acceptance <path-to-loophopf-cli>

#include <gmp.h>
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "loophopf/analysis.hpp"
#include "loophopf/combinat.hpp"
#include "loophopf/endo.hpp"
#include "loophopf/families.hpp"
#include "loophopf/quivers.hpp"
#include "loophopf/table.hpp"
#include "loophopf/table_io.hpp"
#include "loophopf/verify.hpp"

using namespace loophopf;

namespace {

std::uint64_t lcg(std::uint64_t& s) {
  s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  return s >> 11;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Shared state: tables built once in criterion 4 and reused afterwards.
struct Gate {
  std::string cli;
  std::map<std::array<std::uint32_t, 3>, MultTable> lnd;  // key = (p, n, d)
  std::vector<MultTable> pool;  // commutative verified tables for criterion 12
};

const std::vector<std::array<std::uint32_t, 3>>& lnd_params() {
  static const std::vector<std::array<std::uint32_t, 3>> params = [] {
    std::vector<std::array<std::uint32_t, 3>> v;
    for (std::uint32_t p : {2u, 3u})
      for (std::uint32_t n = 1; n <= 3; ++n)
        for (std::uint32_t d = 0; d <= n; ++d) v.push_back({p, n, d});
    for (std::uint32_t n = 1; n <= 2; ++n)
      for (std::uint32_t d = 0; d <= n; ++d) v.push_back({5, n, d});
    return v;
  }();
  return params;
}

// ---------------------------------------------------------------------------
// Criterion 1: Lucas digits, carry counts and Legendre valuations of binomial
// coefficients agree with each other and with big-integer arithmetic.

bool criterion1(Gate&, std::string& note) {
  auto start = std::chrono::steady_clock::now();
  const std::array<Prime, 4> primes{Prime(2), Prime(3), Prime(5), Prime(7)};
  mpz_t binom, rest;
  mpz_init(binom);
  mpz_init(rest);
  std::array<mpz_t, 4> pz;
  for (std::size_t i = 0; i < 4; ++i) mpz_init_set_ui(pz[i], primes[i].value);
  bool ok = true;
  for (std::uint64_t m = 1; m <= 300 && ok; ++m)
    for (std::uint64_t n = 1; n <= 300 && ok; ++n) {
      mpz_bin_uiui(binom, m + n, n);
      for (std::size_t i = 0; i < 4 && ok; ++i) {
        Prime p = primes[i];
        std::uint32_t lb = lucas_binom(m + n, n, p);
        std::uint64_t cc = carry_count(m, n, p);
        std::uint64_t leg = legendre_sum(m + n, p) - legendre_sum(m, p) - legendre_sum(n, p);
        bool vanish = binom_vanishes(m, n, p);
        if (cc != leg || vanish != (cc > 0) || vanish != (lb == 0) ||
            mpz_fdiv_ui(binom, p.value) != lb ||
            static_cast<std::uint64_t>(mpz_remove(rest, binom, pz[i])) != cc) {
          note = "mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                 " p=" + std::to_string(p.value);
          ok = false;
        }
      }
    }
  mpz_clear(binom);
  mpz_clear(rest);
  for (auto& z : pz) mpz_clear(z);
  double dt = seconds_since(start);
  if (ok && dt > 2.0) {
    note = "time budget exceeded: " + std::to_string(dt) + " s";
    ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 2: the thin-split enumeration realizes binomials mod p.

bool criterion2(Gate&, std::string& note) {
  auto start = std::chrono::steady_clock::now();
  mpz_t z;
  mpz_init(z);
  bool ok = true;
  for (unsigned a = 0; a <= 16 && ok; ++a)
    for (unsigned b = 0; a + b <= 16 && ok; ++b) {
      mpz_bin_uiui(z, a + b, a);
      if (thin_split_count(a, b) != mpz_get_ui(z)) {
        note = "count mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        ok = false;
        break;
      }
      for (unsigned p : {2u, 3u, 5u})
        if (thin_split_product_loop(a, b, Prime(p)) != lucas_binom(a + b, a, Prime(p))) {
          note = "product mismatch at (" + std::to_string(a) + "," + std::to_string(b) +
                 ") p=" + std::to_string(p);
          ok = false;
          break;
        }
    }
  mpz_clear(z);
  double dt = seconds_since(start);
  if (ok && dt > 5.0) {
    note = "time budget exceeded: " + std::to_string(dt) + " s";
    ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Criterion 3: 100 seeded endomorphisms of k-loop_12 over GF(5).

bool criterion3(Gate&, std::string& note) {
  auto start = std::chrono::steady_clock::now();
  const GfPtr F = Gf::make(Prime(5), 1);
  const std::size_t N = 12;
  std::uint64_t seed = 20260814;
  const FeMat id_mat = FeMat::identity(F, N);
  for (int trial = 0; trial < 100; ++trial) {
    auto fail = [&](const char* what) {
      note = std::string(what) + " at trial " + std::to_string(trial);
      return false;
    };
    std::size_t len = 1 + lcg(seed) % (N - 1);
    std::vector<Fe> lam;
    for (std::size_t i = 0; i < len; ++i) lam.push_back(F->element(lcg(seed) % 5));
    if (trial % 5 == 0)
      lam[0] = F->zero();  // a fifth of the trials are non-automorphisms
    else if (lam[0].is_zero())
      lam[0] = F->element(1 + lcg(seed) % 4);
    LambdaSeq f(F, lam);

    // (f (x) f) Delta = Delta f, computed from scratch on every basis path.
    for (std::size_t m = 0; m < N; ++m) {
      TensorElement lhs = comult(apply(f, LoopElement::basis(F, N, m)));
      TensorElement rhs(F, N);
      for (std::size_t i = 0; i <= m; ++i)
        rhs += tensor_of(apply(f, LoopElement::basis(F, N, i)),
                         apply(f, LoopElement::basis(F, N, m - i)));
      if (lhs != rhs) return fail("coalgebra-map identity");
    }
    if (!is_coalgebra_map(matrix(f, N))) return fail("is_coalgebra_map");

    std::size_t glen = 1 + lcg(seed) % (N - 1);
    std::vector<Fe> mu;
    for (std::size_t i = 0; i < glen; ++i) mu.push_back(F->element(lcg(seed) % 5));
    LambdaSeq g(F, mu);
    if (matrix(compose(f, g), N) != matrix(f, N) * matrix(g, N))
      return fail("matrix functoriality");

    bool aut = is_automorphism(f);
    if (aut != !f.lambda(1).is_zero()) return fail("automorphism criterion");
    if (aut != matrix(f, N).inverse().has_value()) return fail("matrix invertibility");
    if (aut) {
      LambdaSeq h = invert(f, N);
      if (matrix(compose(f, h), N) != id_mat || matrix(compose(h, f), N) != id_mat)
        return fail("inverse round-trip");
    } else {
      bool threw = false;
      try {
        invert(f, N);
      } catch (const std::domain_error&) {
        threw = true;
      }
      if (!threw) return fail("invert on a non-automorphism");
    }
  }
  double dt = seconds_since(start);
  if (dt > 5.0) {
    note = "time budget exceeded: " + std::to_string(dt) + " s";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 4: every L(n,d) table passes the full verifier.

bool criterion4(Gate& gate, std::string& note) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& [p, n, d] : lnd_params()) {
    MultTable t = build_Lnd(FamilyParams(Prime(p), n, d));
    HopfReport rep = verify_table(t);
    if (!rep.hopf_ok() || !rep.commutative.passed() || !rep.uniserial.passed()) {
      note = "verification failed for (" + std::to_string(p) + "," + std::to_string(n) + "," +
             std::to_string(d) + ")";
      return false;
    }
    gate.pool.push_back(t);
    gate.lnd.emplace(std::array<std::uint32_t, 3>{p, n, d}, std::move(t));
  }
  double dt = seconds_since(start);
  if (dt > 120.0) {
    note = "time budget exceeded: " + std::to_string(dt) + " s";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 5: generator relations including F = V^d on every L(n,d) table.

bool criterion5(Gate& gate, std::string& note) {
  for (const auto& [key, t] : gate.lnd) {
    RelationReport rel = relation_suite(t, FamilyParams(Prime(key[0]), key[1], key[2]));
    if (!rel.ok()) {
      note = "relations failed for (" + std::to_string(key[0]) + "," + std::to_string(key[1]) +
             "," + std::to_string(key[2]) + ")";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 6: the classifier recovers d and separates all n + 1 values.

bool criterion6(Gate& gate, std::string& note) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::set<std::uint32_t>> seen;
  for (const auto& [key, t] : gate.lnd) {
    Classification c = classify(t);
    if (c.kind != ClassKind::Family || c.n != key[1] || c.d != key[2]) {
      note = "classify(" + std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
             std::to_string(key[2]) + ") returned " + c.text();
      return false;
    }
    seen[{key[0], key[1]}].insert(c.d);
  }
  for (const auto& [pn, ds] : seen)
    if (ds.size() != pn.second + 1) {
      note = "expected " + std::to_string(pn.second + 1) + " distinct values for p=" +
             std::to_string(pn.first) + " n=" + std::to_string(pn.second);
      return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 7: the semisimple/local dichotomy along d, with the explicit
// integral of counit one at d = 0.

bool criterion7(Gate& gate, std::string& note) {
  for (const auto& [key, t] : gate.lnd) {
    IntegralInfo info = integral(t);
    bool ok;
    if (key[2] == 0) {
      ok = is_semisimple(t) && info.t_is_integral && info.t_counit.is_one() &&
           info.has_counit_one() && info.dim() == 1;
    } else {
      ok = is_local(t) && !is_semisimple(t) && !info.has_counit_one() && info.dim() == 1;
    }
    if (!ok) {
      note = "dichotomy failed for (" + std::to_string(key[0]) + "," + std::to_string(key[1]) +
             "," + std::to_string(key[2]) + ")";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 8: the divided-power identity a_{sp+t} = a_p^s a_1^t / (s! t!)
// in L(2,1).

bool criterion8(Gate& gate, std::string& note) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const MultTable& t = gate.lnd.at({p, 2, 1});
    const GfPtr& F = t.field();
    const std::size_t N = t.dim();
    for (std::uint64_t s = 0; s < p; ++s)
      for (std::uint64_t u = 0; u < p; ++u) {
        std::uint64_t fact = 1;
        for (std::uint64_t i = 2; i <= s; ++i) fact *= i;
        for (std::uint64_t i = 2; i <= u; ++i) fact *= i;
        LoopElement lhs = multiply(t, power(t, LoopElement::basis(F, N, p), s),
                                   power(t, LoopElement::basis(F, N, 1), u));
        lhs = inv(F->from_int(fact)) * lhs;
        if (lhs != LoopElement::basis(F, N, s * p + u)) {
          note = "identity failed at p=" + std::to_string(p) + " s=" + std::to_string(s) +
                 " t=" + std::to_string(u);
          return false;
        }
      }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 9 (expected failure): the published 4-dimensional relations with
// xy - yx = x would have to verify as a non-commutative Hopf structure.

bool criterion9(Gate&, std::string& note) {
  HopfReport rep = verify_table(build_nc2());
  if (rep.hopf_ok() && rep.commutative.status == Check::Fail) return true;
  note = "relations are inconsistent; the realized table fails "
         "associativity while staying non-commutative";
  return false;
}

// ---------------------------------------------------------------------------
// Criterion 10: exhaustively, dimension-p tables over GF(p) fall into exactly
// two isomorphism classes.

bool conjugation_isomorphic(const MultTable& a, const MultTable& b) {
  const GfPtr& F = a.field();
  const std::size_t n_lam = a.dim() - 1;
  std::vector<std::uint64_t> idx(n_lam, 0);
  idx[0] = 1;  // lambda_1 != 0
  while (true) {
    std::vector<Fe> v;
    v.reserve(n_lam);
    for (auto i : idx) v.push_back(F->element(i));
    if (conjugate(a, LambdaSeq(F, std::move(v))) == b) return true;
    std::size_t pos = 0;
    while (pos < n_lam) {
      if (++idx[pos] < F->order()) break;
      idx[pos] = (pos == 0) ? 1 : 0;
      ++pos;
    }
    if (pos == n_lam) return false;
  }
}

bool criterion10(Gate& gate, std::string& note) {
  auto start = std::chrono::steady_clock::now();
  for (std::uint32_t p : {2u, 3u}) {
    GfPtr field = Gf::make(Prime(p), 1);
    std::vector<MultTable> tables = enumerate_dim_p(field);

    std::vector<NormalizeResult> normed;
    unsigned ext = 1;
    for (const auto& t : tables) {
      normed.push_back(normalize_dim_p(t));
      ext = std::max(ext, normed.back().ext_degree);
    }
    GfPtr big = ext == 1 ? field : Gf::make(Prime(p), ext, find_irreducible(Prime(p), ext));

    std::vector<MultTable> embedded;
    for (const auto& nr : normed) {
      MultTable e = nr.table.field() == big
                        ? nr.table
                        : map_table(nr.table, FieldEmbedding(nr.table.field(), big));
      if (!verify_table(e).hopf_ok()) {
        note = "normalized table failed verification at p=" + std::to_string(p);
        return false;
      }
      embedded.push_back(std::move(e));
    }
    for (const auto& e : embedded) gate.pool.push_back(e);

    std::vector<const MultTable*> reps;
    for (const auto& e : embedded) {
      bool found = false;
      for (const auto* r : reps)
        if (conjugation_isomorphic(*r, e)) {
          found = true;
          break;
        }
      if (!found) reps.push_back(&e);
    }
    if (reps.size() != 2) {
      note = "p=" + std::to_string(p) + ": found " + std::to_string(reps.size()) +
             " classes among " + std::to_string(embedded.size()) + " tables";
      return false;
    }
  }
  double dt = seconds_since(start);
  if (dt > 60.0) {
    note = "time budget exceeded: " + std::to_string(dt) + " s";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 11: dual-cyclic tables verify, are semisimple, and share the
// L(n,0) class.

bool criterion11(Gate& gate, std::string& note) {
  for (std::uint32_t p : {2u, 3u})
    for (std::uint32_t n = 1; n <= 2; ++n) {
      MultTable dc = build_dual_cyclic(Prime(p), n);
      HopfReport rep = verify_table(dc);
      Classification want{ClassKind::Family, n, 0};
      if (!rep.hopf_ok() || !rep.semisimple.value_or(false) || !rep.classification ||
          !(*rep.classification == want) ||
          !(classify(gate.lnd.at({p, n, 0})) == want)) {
        note = "dual-cyclic p=" + std::to_string(p) + " n=" + std::to_string(n);
        return false;
      }
      gate.pool.push_back(std::move(dc));
    }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 12: the antipode squares to the identity on every commutative
// verified table seen by this gate.

bool criterion12(Gate& gate, std::string& note) {
  gate.pool.push_back(build_Lnd(FamilyParams(Prime(2), 2, 1), Gf::make(Prime(2), 2)));
  gate.pool.push_back(build_graded(Prime(3), 2, Gf::make(Prime(3), 2)));
  std::size_t checked = 0;
  for (const MultTable& t : gate.pool) {
    HopfReport rep = verify_table(t);
    if (!rep.hopf_ok() || !rep.commutative.passed() || !rep.antipode_matrix) {
      note = "pool table is not a commutative verified table";
      return false;
    }
    const FeMat& s = *rep.antipode_matrix;
    if (s * s != FeMat::identity(t.field(), t.dim())) {
      note = "S^2 != id on a pool table of dimension " + std::to_string(t.dim());
      return false;
    }
    ++checked;
  }
  if (checked < 30) {  // 23 L(n,d) + 11 dimension-p + 4 dual-cyclic + 2 extension-field
    note = "pool unexpectedly small: " + std::to_string(checked);
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 13: CLI end-to-end with byte-exact files and documented exit
// codes.

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunOut {
  int code = -1;
  std::string out, err;
};

RunOut run_cli(const std::string& cli, const std::string& args, const std::filesystem::path& dir) {
  static int counter = 0;
  std::filesystem::path ofile = dir / ("stdout." + std::to_string(counter));
  std::filesystem::path efile = dir / ("stderr." + std::to_string(counter));
  ++counter;
  std::string cmd =
      "'" + cli + "' " + args + " >'" + ofile.string() + "' 2>'" + efile.string() + "'";
  int st = std::system(cmd.c_str());
  RunOut r;
  if (st != -1 && WIFEXITED(st)) r.code = WEXITSTATUS(st);
  r.out = slurp(ofile);
  r.err = slurp(efile);
  return r;
}

bool criterion13(Gate& gate, std::string& note) {
  if (gate.cli.empty()) {
    note = "CLI path not provided";
    return false;
  }
  namespace fs = std::filesystem;
  std::string tmpl = (fs::temp_directory_path() / "loophopf_accept_XXXXXX").string();
  std::vector<char> buf(tmpl.begin(), tmpl.end());
  buf.push_back('\0');
  if (!mkdtemp(buf.data())) {
    note = "mkdtemp failed";
    return false;
  }
  fs::path dir(buf.data());

  std::vector<std::string> failures;
  auto step = [&](const std::string& label, bool ok) {
    if (!ok) failures.push_back(label);
  };
  auto file = [&](const char* name) { return (dir / name).string(); };
  auto run = [&](const std::string& args) { return run_cli(gate.cli, args, dir); };

  // Family builds: exit 0 and byte-exact output files.
  RunOut r = run("build --family ld --p 2 --n 2 --d 1 --out " + file("ld221.json"));
  step("build ld(2,2,1) exits 0", r.code == 0 && r.out.empty() && r.err.empty());
  step("ld(2,2,1) file is byte-exact",
       slurp(file("ld221.json")) == export_table(gate.lnd.at({2, 2, 1})));

  r = run("build --family graded --p 2 --n 3 --out " + file("graded23.json"));
  step("build graded(2,3) exits 0", r.code == 0);
  step("graded(2,3) file is byte-exact",
       slurp(file("graded23.json")) == export_table(build_graded(Prime(2), 3)));

  r = run("build --family dual-cyclic --p 2 --n 1 --out " + file("dc21.json"));
  step("build dual-cyclic(2,1) exits 0", r.code == 0);
  step("dual-cyclic(2,1) file is byte-exact",
       slurp(file("dc21.json")) == export_table(build_dual_cyclic(Prime(2), 1)));

  r = run("build --family ld --p 3 --n 2 --d 0 --out " + file("ld320.json"));
  step("build ld(3,2,0) exits 0", r.code == 0);

  r = run("build --family ld --p 2 --n 1 --d 0 --out " + file("ld210.json"));
  step("build ld(2,1,0) exits 0", r.code == 0);

  r = run("build --family graded --p 3 --n 1 --out " + file("graded31.json"));
  step("build graded(3,1) exits 0", r.code == 0);

  r = run("build --family ld --p 2 --n 2 --d 1 --ext 2 --out " + file("ld221e2.json"));
  step("build ld(2,2,1) over GF(4) exits 0", r.code == 0);
  step("GF(4) file is byte-exact",
       slurp(file("ld221e2.json")) ==
           export_table(build_Lnd(FamilyParams(Prime(2), 2, 1), Gf::make(Prime(2), 2))));

  // Verify / classify on good files.
  r = run("verify " + file("ld221.json"));
  step("verify exits 0 silently", r.code == 0 && r.out.empty() && r.err.empty());
  r = run("verify --report " + file("ld221.json"));
  step("verify --report prints the exact report",
       r.code == 0 && r.out == render(verify_table(gate.lnd.at({2, 2, 1}))));
  r = run("classify " + file("ld221.json"));
  step("classify ld(2,2,1)", r.code == 0 && r.out == "L(2,1)\n");
  r = run("classify " + file("graded23.json"));
  step("classify graded(2,3)", r.code == 0 && r.out == "L(3,3)\n");
  r = run("classify " + file("ld320.json"));
  step("classify ld(3,2,0)", r.code == 0 && r.out == "L(2,0)\n");

  // Round-trip: the emitted file imports back to the same table.
  step("import(file) round-trips",
       import_table(slurp(file("ld221.json"))) == gate.lnd.at({2, 2, 1}));

  // binom subcommand.
  r = run("binom --p 5 --m 2 --n 3");
  step("binom p=5", r.code == 0 &&
                        r.out == "binom=0 carries=1\n"
                                 "legendre: nu(m!)=0 nu(n!)=0 nu((m+n)!)=1\n");
  r = run("binom --p 7 --m 2 --n 3");
  step("binom p=7", r.code == 0 &&
                        r.out == "binom=3 carries=0\n"
                                 "legendre: nu(m!)=0 nu(n!)=0 nu((m+n)!)=0\n");
  r = run("binom --p 6 --m 1 --n 1");
  step("binom rejects composite p", r.code == 2);
  r = run("binom --p 5 --m 0 --n 1");
  step("binom rejects m=0", r.code == 2);

  // endo subcommand.
  r = run("endo --p 5 --lambda 2,1 --compose 1,3 --N 5");
  step("endo compose", r.code == 0 && r.out == "2,2,1,4\n");
  r = run("endo --p 5 --lambda 1,1 --invert --N 6");
  step("endo invert", r.code == 0 && r.out == "1,4,2,0,4\n");
  r = run("endo --p 7 --lambda 2,3,4 --apply 2");
  step("endo apply", r.code == 0 && r.out == "3*a1 + 4*a2\n");
  r = run("endo --p 5 --lambda 0,1 --invert --N 4");
  step("endo invert rejects lambda_1 = 0",
       r.code == 1 && r.err == "error: lambda_1 = 0: not an automorphism\n");
  r = run("endo --p 5 --lambda 1 --invert --apply 1");
  step("endo rejects two modes", r.code == 2);

  // antipode / integral subcommands.
  r = run("antipode " + file("graded31.json"));
  step("antipode graded(3,1)",
       r.code == 0 && r.out == "S(a0) = 1*a0\nS(a1) = 2*a1\nS(a2) = 1*a2\n");
  r = run("integral " + file("ld210.json"));
  step("integral L(1,0)", r.code == 0 && r.out == "t = 1*a0 + 1*a1, eps(t) = 1, dim ∫ = 1\n");

  // The inconsistent published relations: build writes the file, then the
  // mandatory verification fails; verify and classify agree.
  r = run("build --family nc2 --out " + file("nc2.json"));
  step("build nc2 exits 1", r.code == 1);
  step("nc2 stderr carries the report", r.err == render(verify_table(build_nc2())));
  step("nc2 file is still byte-exact", slurp(file("nc2.json")) == export_table(build_nc2()));
  r = run("verify " + file("nc2.json"));
  step("verify nc2 exits 1",
       r.code == 1 && r.out.find("associativity: FAIL at (1,2,2)") != std::string::npos &&
           r.out.find("commutative: FAIL at (1,2)") != std::string::npos);
  r = run("integral " + file("nc2.json"));
  step("integral nc2 exits 1", r.code == 1);
  r = run("classify " + file("nc2.json"));
  step("classify nc2", r.code == 1 && r.out == "unclassified\n");

  // Invalid input paths: exit code 2.
  {
    std::ofstream corrupt(file("corrupt.json"), std::ios::binary);
    corrupt << slurp(file("dc21.json")) << "\n";  // trailing newline: not canonical
  }
  r = run("verify " + file("corrupt.json"));
  step("verify rejects non-canonical bytes", r.code == 2 && r.err.rfind("error: ", 0) == 0);
  r = run("verify " + file("missing.json"));
  step("verify rejects a missing file", r.code == 2);
  r = run("build --family ld --p 2 --n 1 --d 2 --out " + file("bad.json"));
  step("build rejects d > n", r.code == 2);
  r = run("build --family ld --p 2 --n 1 --out " + file("bad.json"));
  step("build rejects ld without --d", r.code == 2);
  r = run("build --family graded --p 9 --n 1 --out " + file("bad.json"));
  step("build rejects composite p", r.code == 2);
  r = run("build --family nc2 --p 2 --out " + file("bad.json"));
  step("build rejects nc2 with --p", r.code == 2);
  r = run("build --family bogus --p 2 --n 1 --out " + file("bad.json"));
  step("build rejects unknown family", r.code == 2);
  r = run("");
  step("missing subcommand exits 2", r.code == 2);
  r = run("frobnicate");
  step("unknown subcommand exits 2", r.code == 2);

  fs::remove_all(dir);
  if (!failures.empty()) {
    note = std::to_string(failures.size()) + " step(s) failed, first: " + failures.front();
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  Gate gate;
  if (argc > 1) gate.cli = argv[1];

  struct Criterion {
    int id;
    const char* text;
    bool expected_fail;
    std::function<bool(Gate&, std::string&)> fn;
  };
  const std::vector<Criterion> criteria{
      {1,
       "Lucas digits, carry counts and Legendre valuations match big-integer "
       "binomials for m, n <= 300 and p in {2,3,5,7} within 2 s",
       false, criterion1},
      {2,
       "thin-split enumeration realizes C(a+b,a) mod p for a+b <= 16 and "
       "p in {2,3,5} within 5 s",
       false, criterion2},
      {3,
       "100 seeded endomorphisms of k-loop_12 over GF(5): coalgebra maps, "
       "matrix functoriality, inversion, automorphism criterion within 5 s",
       false, criterion3},
      {4,
       "L(n,d) tables pass the full verifier for p in {2,3}, n <= 3 and "
       "p = 5, n <= 2, all 0 <= d <= n, within 2 min",
       false, criterion4},
      {5, "generator relations including F = V^d hold on every L(n,d) table", false, criterion5},
      {6, "the classifier recovers d and separates all n + 1 values per (p, n)", false,
       criterion6},
      {7,
       "L(n,0) is semisimple with the explicit integral of counit one; "
       "L(n,d >= 1) is local and not semisimple",
       false, criterion7},
      {8, "divided-power identity a_{sp+t} = a_p^s a_1^t / (s! t!) in L(2,1)", false, criterion8},
      {9,
       "the published 4-dimensional non-commutative relations verify as a "
       "Hopf structure",
       true, criterion9},
      {10,
       "exhaustive dimension-p structures over GF(p) form exactly 2 "
       "isomorphism classes for p in {2,3} within 1 min",
       false, criterion10},
      {11, "dual-cyclic tables verify, are semisimple and share the L(n,0) class", false,
       criterion11},
      {12, "the antipode squares to the identity on every commutative verified table", false,
       criterion12},
      {13, "CLI end-to-end: byte-exact table files and documented exit codes", false,
       criterion13},
  };

  int passed = 0, expected_failures = 0, failed = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    try {
      ok = c.fn(gate, note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    std::string line;
    if (ok && !c.expected_fail) {
      line = "PASS criterion " + std::to_string(c.id) + ": " + c.text;
      ++passed;
    } else if (!ok && c.expected_fail) {
      line = "XFAIL criterion " + std::to_string(c.id) + ": " + c.text + " [" + note + "]";
      ++expected_failures;
    } else if (ok && c.expected_fail) {
      line = "XPASS criterion " + std::to_string(c.id) + ": " + c.text +
             " [unexpected pass; the gate treats this as a failure]";
      ++failed;
    } else {
      line = "FAIL criterion " + std::to_string(c.id) + ": " + c.text +
             (note.empty() ? "" : " [" + note + "]");
      ++failed;
    }
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d passed, %d expected failure(s), %d failed\n", passed,
              expected_failures, failed);
  return failed == 0 ? 0 : 1;
}
