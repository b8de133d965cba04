#include "loophopf/endo.hpp"

#include <stdexcept>

namespace loophopf {

namespace {

std::vector<Fe> trimmed(const std::vector<Fe>& v) {
  std::size_t n = v.size();
  while (n > 0 && v[n - 1].is_zero()) --n;
  return std::vector<Fe>(v.begin(), v.begin() + n);
}

// Exact product of dense polynomials (index = degree).
std::vector<Fe> poly_mul(const std::vector<Fe>& a, const std::vector<Fe>& b, const GfPtr& f) {
  if (a.empty() || b.empty()) return {};
  std::vector<Fe> r(a.size() + b.size() - 1, f->zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

LambdaSeq::LambdaSeq(GfPtr field, std::vector<Fe> lambdas)
    : field_(std::move(field)), lambdas_(std::move(lambdas)) {
  if (!field_) throw std::invalid_argument("null field");
  for (const auto& c : lambdas_)
    if (!c.field() || !c.field()->same(*field_))
      throw std::invalid_argument("lambda entry from a different field");
}

LambdaSeq LambdaSeq::identity(GfPtr field) {
  Fe one = field->one();
  return LambdaSeq(std::move(field), {one});
}

Fe LambdaSeq::lambda(std::size_t i) const {
  if (i == 0 || i > lambdas_.size()) return field_->zero();
  return lambdas_[i - 1];
}

bool operator==(const LambdaSeq& a, const LambdaSeq& b) {
  if (!a.field_->same(*b.field_)) throw std::invalid_argument("lambda sequences over different fields");
  return trimmed(a.lambdas_) == trimmed(b.lambdas_);
}

LoopElement evaluate(const LambdaSeq& f, std::size_t n) {
  const GfPtr& k = f.field();
  LoopElement out(k, n + 1);
  if (n == 0) {
    out.set_coeff(0, k->one());
    return out;
  }
  // s truncated to degree n; pw runs over s^r, r = 1..n.
  std::vector<Fe> s(n + 1, k->zero());
  for (std::size_t i = 1; i <= n && i <= f.size(); ++i) s[i] = f.lambda(i);
  std::vector<Fe> pw = s;
  for (std::size_t r = 1; r <= n; ++r) {
    if (r > 1) {
      pw = poly_mul(pw, s, k);
      pw.resize(n + 1, k->zero());
    }
    out.add_term(r, pw[n]);
  }
  return out;
}

LoopElement apply(const LambdaSeq& f, const LoopElement& x) {
  LoopElement out(x.field(), x.bound());
  for (const auto& [m, c] : x.terms()) out += c * evaluate(f, m);
  return out;
}

FeMat matrix(const LambdaSeq& f, std::size_t N) {
  FeMat m(f.field(), N, N);
  for (std::size_t col = 0; col < N; ++col) {
    LoopElement img = evaluate(f, col);
    for (const auto& [r, c] : img.terms()) m.at(r, col) = c;
  }
  return m;
}

bool is_coalgebra_map(const FeMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("endomorphism matrix must be square");
  const GfPtr& k = m.field();
  const std::size_t N = m.rows();
  std::vector<LoopElement> img;
  img.reserve(N);
  for (std::size_t col = 0; col < N; ++col) {
    LoopElement x(k, N);
    for (std::size_t r = 0; r < N; ++r) x.set_coeff(r, m.at(r, col));
    img.push_back(std::move(x));
  }
  for (std::size_t n = 0; n < N; ++n) {
    Fe eps_expected = n == 0 ? k->one() : k->zero();
    if (counit(img[n]) != eps_expected) return false;
    TensorElement lhs(k, N);
    for (std::size_t i = 0; i <= n; ++i) lhs += tensor_of(img[i], img[n - i]);
    if (lhs != comult(img[n])) return false;
  }
  return true;
}

LambdaSeq compose(const LambdaSeq& f, const LambdaSeq& g) {
  const GfPtr& k = f.field();
  if (!k->same(*g.field())) throw std::invalid_argument("lambda sequences over different fields");
  if (f.size() == 0 || g.size() == 0) return LambdaSeq(k, {});
  std::vector<Fe> gpoly(g.size() + 1, k->zero());
  for (std::size_t i = 1; i <= g.size(); ++i) gpoly[i] = g.lambda(i);
  std::vector<Fe> result(f.size() * g.size() + 1, k->zero());
  std::vector<Fe> pw = gpoly;
  for (std::size_t r = 1; r <= f.size(); ++r) {
    if (r > 1) pw = poly_mul(pw, gpoly, k);
    Fe lr = f.lambda(r);
    if (!lr.is_zero())
      for (std::size_t j = 0; j < pw.size(); ++j) result[j] += lr * pw[j];
  }
  return LambdaSeq(k, std::vector<Fe>(result.begin() + 1, result.end()));
}

bool is_automorphism(const LambdaSeq& f) { return !f.lambda(1).is_zero(); }

LambdaSeq invert(const LambdaSeq& f, std::size_t N) {
  if (!is_automorphism(f)) throw std::domain_error("lambda_1 = 0: not an automorphism");
  if (N < 2) return LambdaSeq(f.field(), {});
  auto minv = matrix(f, N).inverse();
  if (!minv) throw std::logic_error("triangular matrix with nonzero diagonal must invert");
  // Row 1 of the inverse matrix is the inverse map's lambda-sequence.
  std::vector<Fe> mu;
  mu.reserve(N - 1);
  for (std::size_t col = 1; col < N; ++col) mu.push_back(minv->at(1, col));
  return LambdaSeq(f.field(), std::move(mu));
}

LambdaSeq extend(const LambdaSeq& f, std::size_t M) {
  std::vector<Fe> padded = f.entries();
  while (padded.size() + 1 < M) padded.push_back(f.field()->zero());
  return LambdaSeq(f.field(), std::move(padded));
}

std::string render(const LambdaSeq& f) {
  auto v = trimmed(f.entries());
  if (v.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += render(v[i]);
  }
  return s;
}

}  // namespace loophopf
