#include "loophopf/analysis.hpp"

#include <stdexcept>

namespace loophopf {

namespace {

std::pair<std::size_t, bool> p_power_exponent(std::size_t N, std::uint64_t p) {
  std::size_t n = 0;
  while (N % p == 0) {
    N /= p;
    ++n;
  }
  return {n, N == 1};
}

}  // namespace

bool IntegralInfo::has_counit_one() const {
  for (const auto& x : basis)
    if (!counit(x).is_zero()) return true;
  return false;
}

IntegralInfo integral(const MultTable& t) {
  const std::size_t N = t.dim();
  const GfPtr& k = t.field();
  const std::uint64_t p = k->p();

  LoopElement prod = LoopElement::basis(k, N, 0);
  for (std::size_t l = 1; l < N; ++l) {
    LoopElement factor = LoopElement::basis(k, N, 0) -
                         power(t, LoopElement::basis(k, N, l), p - 1);
    prod = multiply(t, prod, factor);
  }

  // Left-integral system: for every a >= 1 and x = sum_j x_j a_j,
  // a_a * x = 0, i.e. sum_j x_j entry(a, j) = 0 coefficientwise.
  FeMat sys(k, (N - 1) * N, N);
  for (std::size_t a = 1; a < N; ++a)
    for (std::size_t j = 0; j < N; ++j)
      for (const auto& [r, c] : t.entry(a, j).terms()) sys.at((a - 1) * N + r, j) = c;

  IntegralInfo info{prod, counit(prod), true, {}};
  for (std::size_t a = 1; a < N && info.t_is_integral; ++a)
    if (!multiply(t, LoopElement::basis(k, N, a), prod).is_zero()) info.t_is_integral = false;

  for (auto& vec : sys.nullspace()) {
    LoopElement x(k, N);
    for (std::size_t j = 0; j < N; ++j) x.set_coeff(j, vec[j]);
    info.basis.push_back(std::move(x));
  }
  return info;
}

bool is_semisimple(const MultTable& t) { return integral(t).has_counit_one(); }

bool is_local(const MultTable& t) {
  const std::size_t N = t.dim();
  for (std::size_t m = 1; m < N; ++m) {
    LoopElement y = LoopElement::basis(t.field(), N, m);
    bool nilpotent = false;
    for (std::size_t iter = 0; iter < N; ++iter) {
      y = frobenius(t, y);
      if (y.is_zero()) {
        nilpotent = true;
        break;
      }
    }
    if (!nilpotent) return false;
  }
  return true;
}

Classification classify(const MultTable& t) {
  const std::size_t N = t.dim();
  const GfPtr& k = t.field();

  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      if (t.entry(a, b) != t.entry(b, a)) return {ClassKind::NonCommutative, 0, 0};

  auto [n, is_pow] = p_power_exponent(N, k->p());
  if (!is_pow) return {ClassKind::Unclassified, 0, 0};

  FeMat frob(k, N, N);
  for (std::size_t m = 0; m < N; ++m) {
    LoopElement fr = frobenius(t, LoopElement::basis(k, N, m));
    for (const auto& [r, c] : fr.terms()) frob.at(r, m) = c;
  }
  const std::size_t rank = frob.rank();

  std::size_t pe = 1;
  for (std::size_t e = 0; e <= n; ++e) {
    if (pe == rank)
      return {ClassKind::Family, static_cast<std::uint32_t>(n),
              static_cast<std::uint32_t>(n - e)};
    pe *= k->p();
  }
  return {ClassKind::Unclassified, 0, 0};
}

namespace {

// Pullback along the diagonal coalgebra automorphism a_m -> mu^m a_m.
MultTable rescale(const MultTable& t, const Fe& mu) {
  return conjugate(t, LambdaSeq(t.field(), {mu}));
}

}  // namespace

NormalizeResult normalize_dim_p(const MultTable& t) {
  const GfPtr& k = t.field();
  const std::uint64_t p = k->p();
  if (t.dim() != p) throw std::invalid_argument("normalize_dim_p needs a table of dimension p");

  LoopElement fr = frobenius(t, LoopElement::basis(k, p, 1));
  for (const auto& [m, c] : fr.terms())
    if (m != 1) throw std::invalid_argument("alpha_1^p is not a multiple of alpha_1");
  Fe lambda = fr.coeff(1);
  if (lambda.is_zero()) return {t, 0, 1, lambda};

  // Nonzero root of lambda x^p - x, i.e. root of lambda x^{p-1} - 1.
  std::vector<Fe> poly(p, k->zero());
  poly[0] = -k->one();
  poly[p - 1] = lambda;
  if (auto root = find_root(poly)) return {rescale(t, *root), 1, 1, lambda};

  // Minimal extension degree e with ord(lambda) | (p^{ke} - 1)/(p - 1).
  std::uint64_t ord = 1;
  for (Fe acc = lambda; !acc.is_one(); acc *= lambda) ++ord;
  unsigned e = 2;
  for (;; ++e) {
    if (e > 512) throw std::logic_error("no normalizing extension found");
    std::uint64_t geo = 0;  // (p^{ke} - 1)/(p - 1) mod ord, by Horner
    for (unsigned i = 0; i < k->k() * e; ++i) geo = (geo * p + 1) % ord;
    if (geo == 0) break;
  }
  const unsigned big_deg = k->k() * e;
  GfPtr big = Gf::make(k->prime(), big_deg, find_irreducible(k->prime(), big_deg));
  FieldEmbedding emb(k, big);
  MultTable lifted = map_table(t, emb);
  std::vector<Fe> poly_big(p, big->zero());
  poly_big[0] = -big->one();
  poly_big[p - 1] = emb.map(lambda);
  auto root = find_root(poly_big);
  if (!root) throw std::logic_error("extension chosen to contain a root has none");
  return {rescale(lifted, *root), 1, e, lambda};
}

std::vector<MultTable> enumerate_dim_p(const GfPtr& field) {
  const std::uint64_t p = field->p();
  const std::size_t N = p;
  std::vector<MultTable> results;
  if (N == 1) {
    results.emplace_back(field, 1);
    return results;
  }

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t s = 2; s <= 2 * (N - 1); ++s)
    for (std::size_t a = 1; a < N; ++a) {
      if (s < a + 1 || s - a >= N || s - a < 1) continue;
      cells.emplace_back(a, s - a);
    }

  MultTable work(field, N);
  auto dfs = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      if (verify_table(work).hopf_ok()) results.push_back(work);
      return;
    }
    const auto [a, b] = cells[idx];
    // Images of all strictly lower cells are fixed; the unknown entry y
    // contributes a_0 (x) y + y (x) a_0 to Delta(a_a) Delta(a_b).
    TensorElement partial(field, N);
    for (std::size_t i = 0; i <= a; ++i)
      for (std::size_t j = 0; j <= b; ++j) {
        if ((i == 0 && j == 0) || (i == a && j == b)) continue;
        partial += tensor_of(work.entry(i, j), work.entry(a - i, b - j));
      }
    // eps-multiplicativity forces y_0 = 0; the (1, m-1) tensor component
    // forces y_m for m >= 2; y_1 stays free.
    LoopElement forced(field, N);
    for (std::size_t m = 2; m < N; ++m) {
      auto it = partial.terms().find({1, m - 1});
      if (it != partial.terms().end()) forced.set_coeff(m, it->second);
    }
    for (std::uint64_t idx1 = 0; idx1 < field->order(); ++idx1) {
      LoopElement y = forced;
      y.set_coeff(1, field->element(idx1));
      TensorElement full = partial;
      for (const auto& [m, c] : y.terms()) {
        full.add_term(0, m, c);
        full.add_term(m, 0, c);
      }
      if (comult(y) != full) continue;
      work.set_entry(a, b, y);
      self(self, idx + 1);
    }
    work.set_entry(a, b, LoopElement(field, N));
  };
  dfs(dfs, 0);
  return results;
}

}  // namespace loophopf
