#include "loophopf/verify.hpp"

#include <stdexcept>

#include "loophopf/analysis.hpp"

namespace loophopf {

namespace {

AxiomResult pass_result() { return {Check::Pass, {}}; }
AxiomResult fail_result(std::vector<std::size_t> w) { return {Check::Fail, std::move(w)}; }

// (n, true) when N = p^n.
std::pair<std::size_t, bool> p_power_exponent(std::size_t N, std::uint64_t p) {
  std::size_t n = 0;
  while (N % p == 0) {
    N /= p;
    ++n;
  }
  return {n, N == 1};
}

std::string render_axiom(const char* name, const AxiomResult& a) {
  std::string line = std::string(name) + ": ";
  switch (a.status) {
    case Check::Pass:
      return line + "PASS";
    case Check::Skipped:
      return line + "SKIPPED";
    case Check::Fail: {
      line += "FAIL at (";
      for (std::size_t i = 0; i < a.witness.size(); ++i) {
        if (i > 0) line += ",";
        line += std::to_string(a.witness[i]);
      }
      return line + ")";
    }
  }
  return line;
}

std::string render_flag(const std::optional<bool>& f) {
  if (!f.has_value()) return "n/a";
  return *f ? "yes" : "no";
}

}  // namespace

std::string Classification::text() const {
  switch (kind) {
    case ClassKind::Family:
      return "L(" + std::to_string(n) + "," + std::to_string(d) + ")";
    case ClassKind::NonCommutative:
      return "non-commutative";
    case ClassKind::Unclassified:
      return "unclassified";
  }
  return "unclassified";
}

HopfReport verify_bialgebra(const MultTable& t) {
  HopfReport r;
  const std::size_t N = t.dim();
  const GfPtr& k = t.field();

  r.unit = pass_result();
  for (std::size_t a = 0; a < N && r.unit.passed(); ++a)
    for (std::size_t b = 0; b < N; ++b) {
      if (a != 0 && b != 0) continue;
      if (t.entry(a, b) != LoopElement::basis(k, N, a + b)) {
        r.unit = fail_result({a, b});
        break;
      }
    }

  r.eps_mult = pass_result();
  for (std::size_t a = 0; a < N && r.eps_mult.passed(); ++a)
    for (std::size_t b = 0; b < N; ++b) {
      Fe expected = (a == 0 && b == 0) ? k->one() : k->zero();
      if (counit(t.entry(a, b)) != expected) {
        r.eps_mult = fail_result({a, b});
        break;
      }
    }

  r.delta_mult = pass_result();
  for (std::size_t a = 0; a < N && r.delta_mult.passed(); ++a)
    for (std::size_t b = 0; b < N; ++b) {
      TensorElement lhs = comult(t.entry(a, b));
      TensorElement rhs = multiply(t, comult(LoopElement::basis(k, N, a)),
                                   comult(LoopElement::basis(k, N, b)));
      if (lhs != rhs) {
        r.delta_mult = fail_result({a, b});
        break;
      }
    }

  r.associativity = pass_result();
  for (std::size_t a = 0; a < N && r.associativity.passed(); ++a)
    for (std::size_t b = 0; b < N && r.associativity.passed(); ++b)
      for (std::size_t c = 0; c < N; ++c) {
        LoopElement lhs = multiply(t, t.entry(a, b), LoopElement::basis(k, N, c));
        LoopElement rhs = multiply(t, LoopElement::basis(k, N, a), t.entry(b, c));
        if (lhs != rhs) {
          r.associativity = fail_result({a, b, c});
          break;
        }
      }

  r.commutative = pass_result();
  for (std::size_t a = 0; a < N && r.commutative.passed(); ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (t.entry(a, b) != t.entry(b, a)) {
        r.commutative = fail_result({a, b});
        break;
      }

  auto [n, is_pow] = p_power_exponent(N, k->p());
  if (!is_pow) {
    r.uniserial = {Check::Skipped, {}};
  } else {
    r.uniserial = pass_result();
    std::size_t bound = 1;
    for (std::size_t i = 1; i <= n && r.uniserial.passed(); ++i) {
      bound *= k->p();
      for (std::size_t a = 0; a < bound && r.uniserial.passed(); ++a)
        for (std::size_t b = 0; b < bound; ++b) {
          const auto& terms = t.entry(a, b).terms();
          if (!terms.empty() && terms.rbegin()->first >= bound) {
            r.uniserial = fail_result({a, b});
            break;
          }
        }
    }
  }

  return r;
}

AntipodeResult antipode(const MultTable& t) {
  const std::size_t N = t.dim();
  const GfPtr& k = t.field();
  std::vector<LoopElement> s;
  s.reserve(N);
  s.push_back(LoopElement::basis(k, N, 0));
  for (std::size_t m = 1; m < N; ++m) {
    LoopElement v = -LoopElement::basis(k, N, m);
    for (std::size_t l = 1; l < m; ++l)
      v -= multiply(t, s[l], LoopElement::basis(k, N, m - l));
    s.push_back(std::move(v));
  }

  AntipodeResult out{FeMat(k, N, N), pass_result(), pass_result()};
  for (std::size_t m = 0; m < N; ++m)
    for (const auto& [r, c] : s[m].terms()) out.matrix.at(r, m) = c;

  for (std::size_t m = 0; m < N && out.left.passed(); ++m) {
    LoopElement conv(k, N);
    for (std::size_t l = 0; l <= m; ++l)
      conv += multiply(t, s[l], LoopElement::basis(k, N, m - l));
    LoopElement expected(k, N);
    if (m == 0) expected.set_coeff(0, k->one());
    if (conv != expected) out.left = fail_result({m});
  }
  for (std::size_t m = 0; m < N && out.right.passed(); ++m) {
    LoopElement conv(k, N);
    for (std::size_t l = 0; l <= m; ++l)
      conv += multiply(t, LoopElement::basis(k, N, l), s[m - l]);
    LoopElement expected(k, N);
    if (m == 0) expected.set_coeff(0, k->one());
    if (conv != expected) out.right = fail_result({m});
  }
  return out;
}

HopfReport verify_table(const MultTable& t) {
  HopfReport r = verify_bialgebra(t);
  if (r.associativity.passed() && r.unit.passed() && r.delta_mult.passed() &&
      r.eps_mult.passed()) {
    AntipodeResult s = antipode(t);
    r.antipode_matrix = std::move(s.matrix);
    r.antipode_left = s.left;
    r.antipode_right = s.right;
  }
  if (r.hopf_ok()) {
    r.semisimple = is_semisimple(t);
    r.local = is_local(t);
    r.classification = classify(t);
  }
  return r;
}

std::string render(const HopfReport& r) {
  std::string out;
  out += render_axiom("associativity", r.associativity) + "\n";
  out += render_axiom("unit", r.unit) + "\n";
  out += render_axiom("delta-multiplicative", r.delta_mult) + "\n";
  out += render_axiom("eps-multiplicative", r.eps_mult) + "\n";
  out += render_axiom("antipode-left", r.antipode_left) + "\n";
  out += render_axiom("antipode-right", r.antipode_right) + "\n";
  out += render_axiom("commutative", r.commutative) + "\n";
  out += render_axiom("uniserial", r.uniserial) + "\n";
  out += "semisimple: " + render_flag(r.semisimple) + "\n";
  out += "local: " + render_flag(r.local) + "\n";
  out += "classification: ";
  out += r.classification.has_value() ? r.classification->text() : "n/a";
  out += "\n";
  return out;
}

}  // namespace loophopf
