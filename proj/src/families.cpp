#include "loophopf/families.hpp"

#include <gmp.h>

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "loophopf/verify.hpp"

namespace loophopf {

namespace {

std::size_t checked_pow(std::uint64_t p, std::uint32_t n) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (v > (1ull << 24)) throw std::invalid_argument("table dimension p^n too large");
    v *= p;
  }
  return static_cast<std::size_t>(v);
}

std::vector<std::uint32_t> padded_digits(std::uint64_t m, Prime p, std::uint32_t n) {
  auto d = base_p_digits(m, p);
  d.resize(n, 0);
  return d;
}

// Product of digit factorials, in the field's prime subfield.
Fe digit_factorial(const std::vector<std::uint32_t>& digits, const GfPtr& field) {
  Fe r = field->one();
  for (auto d : digits)
    for (std::uint32_t i = 2; i <= d; ++i) r *= field->from_int(i);
  return r;
}

MultTable monomial_table(const FamilyParams& params, const GfPtr& field) {
  const std::size_t N = checked_pow(params.p.value, params.n);
  MultTable t(field, N);
  std::vector<Fe> fact(N, field->one());
  for (std::size_t m = 0; m < N; ++m)
    fact[m] = digit_factorial(padded_digits(m, params.p, params.n), field);
  for (std::size_t a = 1; a < N; ++a)
    for (std::size_t b = 1; b < N; ++b) {
      auto e = padded_digits(a, params.p, params.n);
      auto eb = padded_digits(b, params.p, params.n);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto normalized = reduce(std::move(e), params.p, params.d);
      LoopElement v(field, N);
      if (normalized) {
        std::uint64_t target = from_digits(*normalized, params.p);
        v.set_coeff(static_cast<std::size_t>(target),
                    fact[target] * inv(fact[a] * fact[b]));
      }
      t.set_entry(a, b, std::move(v));
    }
  return t;
}

bool fully_valid(const HopfReport& r) {
  return r.hopf_ok() && r.commutative.passed() &&
         (r.uniserial.status != Check::Fail);
}

// --- exact rational bivariate series for the Honda fixpoint ---

class Rat {
 public:
  Rat() { mpq_init(v); }
  Rat(const Rat& o) {
    mpq_init(v);
    mpq_set(v, o.v);
  }
  Rat(Rat&& o) noexcept {
    mpq_init(v);
    mpq_swap(v, o.v);
  }
  Rat& operator=(const Rat& o) {
    mpq_set(v, o.v);
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    mpq_swap(v, o.v);
    return *this;
  }
  ~Rat() { mpq_clear(v); }

  bool zero() const { return mpq_sgn(v) == 0; }
  mpq_t v;
};

using QGrid = std::vector<Rat>;

QGrid qmul(const QGrid& a, const QGrid& b, std::size_t N) {
  QGrid r(N * N);
  mpq_t tmp;
  mpq_init(tmp);
  for (std::size_t xa = 0; xa < N; ++xa)
    for (std::size_t ya = 0; ya < N; ++ya) {
      const Rat& ca = a[xa * N + ya];
      if (ca.zero()) continue;
      for (std::size_t xb = 0; xb + xa < N; ++xb)
        for (std::size_t yb = 0; yb + ya < N; ++yb) {
          const Rat& cb = b[xb * N + yb];
          if (cb.zero()) continue;
          Rat& dst = r[(xa + xb) * N + (ya + yb)];
          mpq_mul(tmp, ca.v, cb.v);
          mpq_add(dst.v, dst.v, tmp);
        }
    }
  mpq_clear(tmp);
  return r;
}

QGrid qpow(const QGrid& a, std::uint64_t e, std::size_t N) {
  QGrid r(N * N);
  mpq_set_ui(r[0].v, 1, 1);
  QGrid base = a;
  while (e > 0) {
    if (e & 1) r = qmul(r, base, N);
    e >>= 1;
    if (e > 0) base = qmul(base, base, N);
  }
  return r;
}

bool qequal(const QGrid& a, const QGrid& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!mpq_equal(a[i].v, b[i].v)) return false;
  return true;
}

std::uint32_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

FamilyParams::FamilyParams(Prime p_, std::uint32_t n_, std::uint32_t d_) : p(p_), n(n_), d(d_) {
  if (n == 0) throw std::invalid_argument("family parameter n must be >= 1");
  if (d > n) throw std::invalid_argument("family parameter d must satisfy d <= n");
}

std::optional<std::vector<std::uint32_t>> reduce(std::vector<std::uint32_t> e, Prime p,
                                                 std::uint32_t d) {
  for (;;) {
    std::size_t i = e.size();
    while (i > 0 && e[i - 1] < p.value) --i;
    if (i == 0) return e;
    --i;  // largest index with e[i] >= p
    e[i] -= static_cast<std::uint32_t>(p.value);
    if (i < d) return std::nullopt;
    e[i - d] += 1;
  }
}

MultTable build_graded(Prime p, std::uint32_t n, GfPtr field) {
  if (!field) field = Gf::make(p, 1);
  if (field->p() != p.value) throw std::invalid_argument("field characteristic mismatch");
  const std::size_t N = checked_pow(p.value, n);
  MultTable t(field, N);
  for (std::size_t a = 1; a < N; ++a)
    for (std::size_t b = 1; b < N; ++b) {
      LoopElement v(field, N);
      if (a + b < N) v.set_coeff(a + b, field->from_int(lucas_binom(a + b, a, p)));
      t.set_entry(a, b, std::move(v));
    }
  t.family = FamilyTag{"graded", n, std::nullopt};
  return t;
}

MultTable build_dual_cyclic(Prime p, std::uint32_t n, GfPtr field) {
  if (!field) field = Gf::make(p, 1);
  if (field->p() != p.value) throw std::invalid_argument("field characteristic mismatch");
  const std::size_t N = checked_pow(p.value, n);
  MultTable t = fgl::table_from_grid(fgl::grid_multiplicative(N), p, N, field);
  t.family = FamilyTag{"dual-cyclic", n, std::nullopt};
  return t;
}

MultTable build_Lnd(const FamilyParams& params, GfPtr field) {
  if (!field) field = Gf::make(params.p, 1);
  if (field->p() != params.p.value) throw std::invalid_argument("field characteristic mismatch");
  const std::size_t N = checked_pow(params.p.value, params.n);
  FamilyTag tag{"ld", params.n, params.d};

  MultTable mono = monomial_table(params, field);
  if (fully_valid(verify_table(mono))) {
    mono.family = tag;
    return mono;
  }

  fgl::Grid g;
  if (params.d == params.n)
    g = fgl::grid_additive(N);
  else if (params.d == 0)
    g = fgl::grid_multiplicative(N);
  else
    g = fgl::grid_honda(params.p, params.d + 1, N);
  MultTable t = fgl::table_from_grid(g, params.p, N, field);
  if (!fully_valid(verify_table(t)))
    throw std::logic_error("L(n,d) construction failed verification");
  t.family = tag;
  return t;
}

MultTable build_nc2(GfPtr field) {
  if (!field) field = Gf::make(Prime(2), 1);
  if (field->p() != 2) throw std::invalid_argument("nc2 requires characteristic 2");
  const std::size_t N = 4;
  const Fe zero = field->zero(), one = field->one();

  // Algebra basis {1, x, y, yx} (indices 0..3) with xy - yx = x, x^2 = y^2 = 0.
  // The relations are inconsistent (see the header note), so products of
  // basis words depend on the association order; each cell below freezes one
  // evaluation, and the verifier pinpoints the inconsistency at (1,2,2).
  using AVec = std::array<Fe, 4>;
  auto avec = [&](std::initializer_list<std::size_t> idxs) {
    AVec v{zero, zero, zero, zero};
    for (auto i : idxs) v[i] += one;
    return v;
  };
  std::array<std::array<AVec, 4>, 4> amul;
  for (std::size_t j = 0; j < 4; ++j) {
    amul[0][j] = avec({j});
    amul[j][0] = avec({j});
  }
  amul[1][1] = avec({});
  amul[1][2] = avec({1, 3});  // x y = yx + x
  amul[1][3] = avec({});      // x yx = (yx + x) x = 0
  amul[2][1] = avec({3});     // y x = yx
  amul[2][2] = avec({});
  amul[2][3] = avec({});      // y yx = y^2 x = 0
  amul[3][1] = avec({});      // yx x = 0
  amul[3][2] = avec({3});     // yx y = y(yx + x) = yx
  amul[3][3] = avec({});

  auto amul_vec = [&](const AVec& u, const AVec& v) {
    AVec r{zero, zero, zero, zero};
    for (std::size_t i = 0; i < 4; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < 4; ++j) {
        if (v[j].is_zero()) continue;
        Fe c = u[i] * v[j];
        for (std::size_t m = 0; m < 4; ++m) r[m] += c * amul[i][j][m];
      }
    }
    return r;
  };

  // Comultiplication on the algebra basis, as sparse maps (i,j) -> coeff.
  using ATensor = std::map<std::pair<std::size_t, std::size_t>, Fe>;
  auto tadd = [&](ATensor& t, std::size_t i, std::size_t j, const Fe& c) {
    auto it = t.find({i, j});
    if (it == t.end()) {
      if (!c.is_zero()) t.emplace(std::make_pair(i, j), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  };
  std::array<ATensor, 4> adelta;
  tadd(adelta[0], 0, 0, one);
  tadd(adelta[1], 1, 0, one);
  tadd(adelta[1], 0, 1, one);
  tadd(adelta[2], 0, 2, one);
  tadd(adelta[2], 2, 0, one);
  tadd(adelta[2], 1, 1, one);
  // Delta(yx) = Delta(y) Delta(x), computed through the algebra.
  for (const auto& [ij, cy] : adelta[2])
    for (const auto& [uv, cx] : adelta[1]) {
      AVec left = amul_vec(avec({ij.first}), avec({uv.first}));
      AVec right = amul_vec(avec({ij.second}), avec({uv.second}));
      for (std::size_t m1 = 0; m1 < 4; ++m1)
        for (std::size_t m2 = 0; m2 < 4; ++m2)
          tadd(adelta[3], m1, m2, cy * cx * left[m1] * right[m2]);
    }

  auto adelta_of = [&](const AVec& u) {
    ATensor t;
    for (std::size_t i = 0; i < 4; ++i)
      if (!u[i].is_zero())
        for (const auto& [ij, c] : adelta[i]) tadd(t, ij.first, ij.second, u[i] * c);
    return t;
  };

  // Identify a_3 = z in span{yx, x, y}: Delta(z) must deconcatenate as
  // 1 (x) z + x (x) y + y (x) x + z (x) 1.  First hit in enumeration order.
  AVec x = avec({1}), y = avec({2});
  std::optional<AVec> z;
  for (std::size_t bits = 0; bits < 8 && !z; ++bits) {
    AVec cand{zero, zero, zero, zero};
    if (bits & 1) cand[3] += one;
    if (bits & 2) cand[1] += one;
    if (bits & 4) cand[2] += one;
    ATensor want;
    for (std::size_t m = 0; m < 4; ++m) {
      tadd(want, 0, m, cand[m]);
      tadd(want, m, 0, cand[m]);
    }
    tadd(want, 1, 2, one);  // x (x) y
    tadd(want, 2, 1, one);  // y (x) x
    if (adelta_of(cand) == want) z = cand;
  }
  if (!z) throw std::logic_error("no basis identification for a_3 found");

  // Base change: columns of B are the algebra coordinates of a_0..a_3.
  FeMat bmat(field, 4, 4);
  std::array<AVec, 4> alpha = {avec({0}), x, y, *z};
  for (std::size_t col = 0; col < 4; ++col)
    for (std::size_t row = 0; row < 4; ++row) bmat.at(row, col) = alpha[col][row];
  auto binv = bmat.inverse();
  if (!binv) throw std::logic_error("basis identification is singular");

  MultTable t(field, N);
  for (std::size_t a = 1; a < N; ++a)
    for (std::size_t b = 1; b < N; ++b) {
      AVec prod = amul_vec(alpha[a], alpha[b]);
      LoopElement v(field, N);
      for (std::size_t r = 0; r < 4; ++r) {
        Fe c = field->zero();
        for (std::size_t m = 0; m < 4; ++m) c += binv->at(r, m) * prod[m];
        v.set_coeff(r, c);
      }
      t.set_entry(a, b, std::move(v));
    }
  t.family = FamilyTag{"nc2", std::nullopt, std::nullopt};
  return t;
}

RelationReport relation_suite(const MultTable& t, const FamilyParams& params) {
  const std::size_t N = t.dim();
  const GfPtr& k = t.field();
  const std::uint64_t p = params.p.value;
  RelationReport r{true, true, true, true};

  std::vector<std::size_t> gens;
  std::size_t pi = 1;
  for (std::uint32_t i = 0; i < params.n; ++i) {
    gens.push_back(pi);
    pi *= p;
  }

  for (std::size_t i = 0; i < gens.size() && r.commutation; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (t.entry(gens[i], gens[j]) != t.entry(gens[j], gens[i])) {
        r.commutation = false;
        break;
      }

  for (std::uint32_t i = 0; i < params.n; ++i) {
    LoopElement pw = power(t, LoopElement::basis(k, N, gens[i]), p);
    if (i < params.d) {
      if (!pw.is_zero()) r.low_powers = false;
    } else {
      std::size_t target = gens[i] / checked_pow(p, params.d);
      if (pw != LoopElement::basis(k, N, target)) r.high_powers = false;
    }
  }

  for (std::size_t m = 0; m < N && r.frobenius_is_vd; ++m) {
    LoopElement lhs = frobenius(t, LoopElement::basis(k, N, m));
    LoopElement rhs = LoopElement::basis(k, N, m);
    for (std::uint32_t i = 0; i < params.d; ++i) rhs = verschiebung(rhs);
    if (lhs != rhs) r.frobenius_is_vd = false;
  }
  return r;
}

namespace fgl {

Grid grid_additive(std::size_t N) {
  Grid g(N * N, 0);
  if (N > 1) {
    g[1 * N + 0] = 1;
    g[0 * N + 1] = 1;
  }
  return g;
}

Grid grid_multiplicative(std::size_t N) {
  Grid g = grid_additive(N);
  if (N > 1) g[1 * N + 1] = 1;
  return g;
}

Grid grid_mul(const Grid& a, const Grid& b, std::size_t N, std::uint64_t p) {
  Grid r(N * N, 0);
  for (std::size_t xa = 0; xa < N; ++xa)
    for (std::size_t ya = 0; ya < N; ++ya) {
      const std::uint64_t ca = a[xa * N + ya];
      if (ca == 0) continue;
      for (std::size_t xb = 0; xb + xa < N; ++xb)
        for (std::size_t yb = 0; yb + ya < N; ++yb) {
          const std::uint64_t cb = b[xb * N + yb];
          if (cb == 0) continue;
          auto& dst = r[(xa + xb) * N + (ya + yb)];
          dst = static_cast<std::uint32_t>((dst + ca * cb) % p);
        }
    }
  return r;
}

Grid grid_honda(Prime p, unsigned height, std::size_t N) {
  if (height == 0) throw std::invalid_argument("formal group law height must be >= 1");

  static std::mutex memo_mutex;
  static std::map<std::tuple<std::uint64_t, unsigned, std::size_t>, Grid> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({p.value, height, N});
    if (it != memo.end()) return it->second;
  }

  const std::uint64_t max_exp = 2 * (N - 1);
  // l(t) = sum_{j>=0} t^{p^{h j}} / p^j; exponents beyond 2(N-1) vanish in
  // the quotient (F has no constant term).
  std::vector<std::pair<std::uint64_t, unsigned long>> terms;  // (p^{h j}, p^j)
  std::uint64_t expo = 1;
  unsigned long denom = 1;
  for (;;) {
    terms.emplace_back(expo, denom);
    for (unsigned i = 0; i < height; ++i) expo *= p.value;
    denom *= static_cast<unsigned long>(p.value);
    if (expo > max_exp) break;
  }

  QGrid base(N * N);
  for (const auto& [e, den] : terms) {
    if (e >= N) continue;
    mpq_t q;
    mpq_init(q);
    mpq_set_ui(q, 1, den);
    mpq_add(base[e * N + 0].v, base[e * N + 0].v, q);
    mpq_add(base[0 * N + e].v, base[0 * N + e].v, q);
    mpq_clear(q);
  }

  QGrid f = base;
  bool converged = false;
  for (std::size_t iter = 0; iter < 4 * N + 8; ++iter) {
    QGrid next = base;
    for (std::size_t j = 1; j < terms.size(); ++j) {
      const auto [e, den] = terms[j];
      QGrid pw = qpow(f, e, N);
      mpq_t q;
      mpq_init(q);
      for (std::size_t c = 0; c < pw.size(); ++c) {
        if (pw[c].zero()) continue;
        mpq_set_ui(q, 1, den);
        mpq_mul(q, q, pw[c].v);
        mpq_sub(next[c].v, next[c].v, q);
      }
      mpq_clear(q);
    }
    if (qequal(next, f)) {
      converged = true;
      break;
    }
    f = std::move(next);
  }
  if (!converged) throw std::logic_error("formal group law fixpoint did not converge");

  Grid out(N * N, 0);
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c].zero()) continue;
    const std::uint64_t den_mod = mpz_fdiv_ui(mpq_denref(f[c].v), p.value);
    if (den_mod == 0)
      throw std::logic_error("formal group law coefficient is not p-integral");
    // mpz_fdiv_ui is a floor mod: non-negative for negative numerators too.
    const std::uint64_t num_mod = mpz_fdiv_ui(mpq_numref(f[c].v), p.value);
    out[c] = static_cast<std::uint32_t>(num_mod * inv_mod(den_mod, p.value) % p.value);
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::make_tuple(p.value, height, N), out);
  return out;
}

MultTable table_from_grid(const Grid& F, Prime p, std::size_t N, GfPtr field) {
  if (!field) field = Gf::make(p, 1);
  if (field->p() != p.value) throw std::invalid_argument("field characteristic mismatch");
  if (F.size() != N * N) throw std::invalid_argument("grid size mismatch");

  MultTable t(field, N);
  std::vector<LoopElement> cells(N * N, LoopElement(field, N));
  Grid cur(N * N, 0);
  cur[0] = 1;  // F^0 = 1
  for (std::size_t m = 0; m < N; ++m) {
    if (m > 0) cur = grid_mul(cur, F, N, p.value);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        if (cur[a * N + b] != 0)
          cells[a * N + b].add_term(m, field->from_int(cur[a * N + b]));
  }
  for (std::size_t a = 1; a < N; ++a)
    for (std::size_t b = 1; b < N; ++b) t.set_entry(a, b, std::move(cells[a * N + b]));
  return t;
}

}  // namespace fgl

}  // namespace loophopf
