#include "vlh/algebra.hpp"

#include <array>
#include <sstream>

#include "vlh/error.hpp"

namespace vlh {

TheoryParams TheoryParams::unchecked(Scalar a, Scalar t, Scalar lambda, Scalar mu, Scalar beta) {
  for (const Scalar* s : {&t, &lambda, &mu, &beta}) {
    if (!(s->field() == a.field())) {
      throw Error(ErrorKind::field_mismatch, "theory parameters must share one field");
    }
  }
  if (a.is_zero()) {
    throw Error(ErrorKind::not_invertible, "parameter a must be invertible", "a", a.to_string());
  }
  TheoryParams th{a, t, lambda, mu, beta, a.inverse(), Scalar{}};
  th.h = beta - a * lambda * lambda - a * mu * mu * t;
  return th;
}

Scalar mu_beta_residual(const TheoryParams& th) { return th.mu * th.beta; }
Scalar lambda_beta_residual(const TheoryParams& th) { return th.lambda * th.beta; }

Scalar classification_residual(const TheoryParams& th) {
  const Field F = th.field();
  const Scalar two(F, 2);
  const Scalar& a = th.a;
  const Scalar& l = th.lambda;
  const Scalar& m = th.mu;
  return two * a * l * m - a * a * m * m * l * l - a * a * m.pow(4) * th.t - two;
}

TheoryParams theory_from_params(const Scalar& a, const Scalar& t, const Scalar& lambda,
                                const Scalar& mu, const Scalar& beta) {
  TheoryParams th = TheoryParams::unchecked(a, t, lambda, mu, beta);
  if (Scalar r = mu_beta_residual(th); !r.is_zero()) {
    throw Error(ErrorKind::constraint_violated, "mu*beta = " + r.to_string() + " != 0", "eq1",
                r.to_string());
  }
  if (Scalar r = lambda_beta_residual(th); !r.is_zero()) {
    throw Error(ErrorKind::constraint_violated, "lambda*beta = " + r.to_string() + " != 0", "eq1",
                r.to_string());
  }
  if (Scalar r = classification_residual(th); !r.is_zero()) {
    throw Error(ErrorKind::constraint_violated,
                "2a*lambda*mu - a^2 mu^2 lambda^2 - a^2 mu^4 t - 2 = " + r.to_string(), "eq2",
                r.to_string());
  }
  return th;
}

TheoryParams theory_from_triple(const Scalar& a, const Scalar& lambda, const Scalar& mu) {
  if (a.is_zero()) {
    throw Error(ErrorKind::not_invertible, "parameter a must be invertible", "a", a.to_string());
  }
  if (mu.is_zero()) {
    throw Error(ErrorKind::not_invertible, "parameter mu must be invertible", "mu", mu.to_string());
  }
  const Field F = a.field();
  const Scalar two(F, 2);
  const Scalar numerator = two * a * lambda * mu - a * a * mu * mu * lambda * lambda - two;
  const Scalar t = numerator / (a * a * mu.pow(4));
  return theory_from_params(a, t, lambda, mu, Scalar::zero(F));
}

namespace {

struct PresetRow {
  int lambda, mu, t, beta;
};

// lambda, mu, t, beta for the eight theories over F2.
constexpr std::array<PresetRow, 8> kRows{{
    {0, 0, 0, 0},
    {0, 0, 0, 1},
    {1, 0, 0, 0},
    {0, 0, 1, 0},
    {0, 0, 1, 1},
    {1, 0, 1, 0},
    {0, 1, 0, 0},
    {1, 1, 1, 0},
}};

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"f2_row1", "f2_row2", "f2_row3", "f2_row4",
                                              "f2_row5", "f2_row6", "f2_row7", "f2_row8",
                                              "manturov"};
  return names;
}

TheoryParams preset(std::string_view name) {
  int row = 0;
  if (name == "manturov") {
    row = 1;
  } else if (name.size() == 7 && name.starts_with("f2_row") && name[6] >= '1' && name[6] <= '8') {
    row = name[6] - '0';
  } else {
    throw Error(ErrorKind::unknown_preset, "unknown theory preset '" + std::string(name) + "'",
                std::string(name));
  }
  const Field F2 = Field::prime(2);
  const PresetRow& r = kRows[row - 1];
  return theory_from_params(Scalar::one(F2), Scalar(F2, r.t), Scalar(F2, r.lambda),
                            Scalar(F2, r.mu), Scalar(F2, r.beta));
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::basis(Field field, Basis b) {
  return b == Basis::one ? AlgebraElement{Scalar::one(field), Scalar::zero(field)}
                         : AlgebraElement{Scalar::zero(field), Scalar::one(field)};
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  one += rhs.one;
  x += rhs.x;
  return *this;
}

AlgebraElement operator-(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  return {lhs.one - rhs.one, lhs.x - rhs.x};
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& v) { return {c * v.one, c * v.x}; }

std::string AlgebraElement::to_string() const {
  if (one.is_zero() && x.is_zero()) return "0";
  std::string out;
  if (!one.is_zero()) out = one.to_string() + "*1";
  if (!x.is_zero()) out += (out.empty() ? "" : " + ") + x.to_string() + "*x";
  return out;
}

TensorElement TensorElement::scalar(const Scalar& c) {
  TensorElement t(c.field(), 0);
  t.add_term({}, c);
  return t;
}

TensorElement TensorElement::from(const AlgebraElement& v) {
  TensorElement t(v.field(), 1);
  t.add_term({Basis::one}, v.one);
  t.add_term({Basis::x}, v.x);
  return t;
}

TensorElement TensorElement::basis(Field field, Index index) {
  TensorElement t(field, index.size());
  t.add_term(std::move(index), Scalar::one(field));
  return t;
}

Scalar TensorElement::coefficient(const Index& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void TensorElement::add_term(Index index, const Scalar& c) {
  if (index.size() != rank_) {
    throw Error(ErrorKind::dimension_mismatch, "tensor index has wrong rank");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(index), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs) {
  if (rhs.rank_ != rank_) throw Error(ErrorKind::dimension_mismatch, "adding tensors of different rank");
  for (const auto& [index, c] : rhs.terms_) add_term(index, c);
  return *this;
}

TensorElement operator-(const TensorElement& lhs, const TensorElement& rhs) {
  return lhs + Scalar(rhs.field(), -1) * rhs;
}

TensorElement operator*(const Scalar& c, const TensorElement& t) {
  TensorElement out(t.field(), t.rank());
  for (const auto& [index, v] : t.terms()) out.add_term(index, c * v);
  return out;
}

TensorElement TensorElement::tensor(const TensorElement& rhs) const {
  TensorElement out(field_, rank_ + rhs.rank_);
  for (const auto& [li, lc] : terms_) {
    for (const auto& [ri, rc] : rhs.terms_) {
      Index index = li;
      index.insert(index.end(), ri.begin(), ri.end());
      out.add_term(std::move(index), lc * rc);
    }
  }
  return out;
}

TensorElement TensorElement::apply(
    std::size_t position, std::size_t arity,
    const std::function<TensorElement(std::span<const Basis>)>& op) const {
  if (position + arity > rank_) {
    throw Error(ErrorKind::dimension_mismatch, "operator does not fit inside the tensor");
  }
  std::optional<TensorElement> out;
  for (const auto& [index, c] : terms_) {
    const TensorElement image = op(std::span<const Basis>(index).subspan(position, arity));
    if (!out) out.emplace(field_, rank_ - arity + image.rank());
    for (const auto& [img_index, img_c] : image.terms()) {
      Index combined(index.begin(), index.begin() + static_cast<std::ptrdiff_t>(position));
      combined.insert(combined.end(), img_index.begin(), img_index.end());
      combined.insert(combined.end(), index.begin() + static_cast<std::ptrdiff_t>(position + arity),
                      index.end());
      out->add_term(std::move(combined), c * img_c);
    }
  }
  if (!out) {
    // Zero input: the image rank comes from probing the operator.
    const TensorElement probe = op(std::vector<Basis>(arity, Basis::one));
    return TensorElement(field_, rank_ - arity + probe.rank());
  }
  return *out;
}

AlgebraElement TensorElement::to_element() const {
  if (rank_ != 1) throw Error(ErrorKind::dimension_mismatch, "tensor is not rank one");
  return {coefficient({Basis::one}), coefficient({Basis::x})};
}

Scalar TensorElement::to_scalar() const {
  if (rank_ != 0) throw Error(ErrorKind::dimension_mismatch, "tensor is not rank zero");
  return coefficient({});
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [index, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    if (index.empty()) continue;
    out += "*";
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (i) out += "(x)";
      out += index[i] == Basis::one ? "1" : "x";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

AlgebraElement unit(const TheoryParams& th) { return AlgebraElement::basis(th.field(), Basis::one); }

Scalar counit(const TheoryParams& th, const AlgebraElement& v) { return v.x * th.a; }

AlgebraElement multiply(const TheoryParams& th, const AlgebraElement& u, const AlgebraElement& v) {
  // (u1 + ux x)(v1 + vx x) = u1 v1 + (u1 vx + ux v1) x + ux vx (h x + t)
  const Scalar xx = u.x * v.x;
  return {u.one * v.one + xx * th.t, u.one * v.x + u.x * v.one + xx * th.h};
}

TensorElement comultiply(const TheoryParams& th, const AlgebraElement& v) {
  const Field F = th.field();
  TensorElement out(F, 2);
  // Delta(1) = f(1(x)x + x(x)1) - h f 1(x)1
  out.add_term({Basis::one, Basis::x}, v.one * th.f);
  out.add_term({Basis::x, Basis::one}, v.one * th.f);
  out.add_term({Basis::one, Basis::one}, -(v.one * th.h * th.f));
  // Delta(x) = f x(x)x + f t 1(x)1
  out.add_term({Basis::x, Basis::x}, v.x * th.f);
  out.add_term({Basis::one, Basis::one}, v.x * th.f * th.t);
  return out;
}

AlgebraElement phi(const TheoryParams& th, const AlgebraElement& v) {
  return {v.one + v.x * th.beta, v.x};
}

AlgebraElement theta(const TheoryParams& th) { return {th.lambda, th.mu}; }

AlgebraElement handle_element(const TheoryParams& th) {
  return multiply_at(th, comultiply(th, unit(th)), 0).to_element();
}

namespace {

AlgebraElement basis_element(Field F, Basis b) { return AlgebraElement::basis(F, b); }

}  // namespace

TensorElement multiply_at(const TheoryParams& th, const TensorElement& t, std::size_t position) {
  return t.apply(position, 2, [&](std::span<const Basis> in) {
    const Field F = th.field();
    return TensorElement::from(multiply(th, basis_element(F, in[0]), basis_element(F, in[1])));
  });
}

TensorElement comultiply_at(const TheoryParams& th, const TensorElement& t, std::size_t position) {
  return t.apply(position, 1, [&](std::span<const Basis> in) {
    return comultiply(th, basis_element(th.field(), in[0]));
  });
}

TensorElement counit_at(const TheoryParams& th, const TensorElement& t, std::size_t position) {
  return t.apply(position, 1, [&](std::span<const Basis> in) {
    return TensorElement::scalar(counit(th, basis_element(th.field(), in[0])));
  });
}

TensorElement phi_at(const TheoryParams& th, const TensorElement& t, std::size_t position) {
  return t.apply(position, 1, [&](std::span<const Basis> in) {
    return TensorElement::from(phi(th, basis_element(th.field(), in[0])));
  });
}

// ---------------------------------------------------------------------------

bool AxiomReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const AxiomCheck* AxiomReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

class ReportBuilder {
 public:
  void check(std::string name, std::string witness_if_failed, bool ok) {
    report_.checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(witness_if_failed)});
  }

  template <class T>
  void equal(std::string name, std::string_view at, const T& lhs, const T& rhs) {
    if (lhs == rhs) {
      pending_.try_emplace(name, true);
      return;
    }
    if (auto it = pending_.find(name); it == pending_.end() || it->second) {
      pending_[name] = false;
      witnesses_[name] = std::string(at) + ": lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
    }
  }

  void flush(const std::string& name) {
    const bool ok = pending_.count(name) ? pending_[name] : true;
    check(name, witnesses_[name], ok);
  }

  AxiomReport take() { return std::move(report_); }

 private:
  AxiomReport report_;
  std::map<std::string, bool> pending_;
  std::map<std::string, std::string> witnesses_;
};

std::string basis_name(Basis b) { return b == Basis::one ? "1" : "x"; }

}  // namespace

AxiomReport verify_axioms(const TheoryParams& th) {
  const Field F = th.field();
  const std::array<Basis, 2> basis{Basis::one, Basis::x};
  const AlgebraElement th_elem = theta(th);
  const AlgebraElement theta_sq = multiply(th, th_elem, th_elem);
  ReportBuilder rb;

  for (Basis b : basis) {
    const AlgebraElement v = basis_element(F, b);
    const std::string at = "v = " + basis_name(b);
    rb.equal("phi_involution", at, phi(th, phi(th, v)), v);
    rb.equal("phi_counit", at, counit(th, phi(th, v)), counit(th, v));
    rb.equal("phi_coproduct", at, phi_at(th, phi_at(th, comultiply(th, v), 0), 1),
             comultiply(th, phi(th, v)));
    rb.equal("counit_law", at, counit_at(th, comultiply(th, v), 0).to_element(), v);
    rb.equal("counit_law", at, counit_at(th, comultiply(th, v), 1).to_element(), v);
    rb.equal("unit_law", at, multiply(th, unit(th), v), v);
    const AlgebraElement tv = multiply(th, th_elem, v);
    rb.equal("theta_phi_invariance", at, phi(th, tv), tv);
    rb.equal("twisted_handle_is_theta_squared", at,
             multiply_at(th, phi_at(th, comultiply(th, v), 0), 0).to_element(),
             multiply(th, theta_sq, v));
    for (Basis c : basis) {
      const AlgebraElement w = basis_element(F, c);
      const std::string at2 = "u = " + basis_name(b) + ", v = " + basis_name(c);
      rb.equal("commutativity", at2, multiply(th, v, w), multiply(th, w, v));
      rb.equal("phi_product", at2, phi(th, multiply(th, v, w)),
               multiply(th, phi(th, v), phi(th, w)));
      const TensorElement vw = TensorElement::from(v).tensor(TensorElement::from(w));
      const TensorElement delta_m = comultiply(th, multiply(th, v, w));
      rb.equal("frobenius_relation", at2, multiply_at(th, comultiply_at(th, vw, 0), 1), delta_m);
      rb.equal("frobenius_relation", at2, multiply_at(th, comultiply_at(th, vw, 1), 0), delta_m);
      for (Basis d : basis) {
        const AlgebraElement z = basis_element(F, d);
        rb.equal("associativity", at2 + ", w = " + basis_name(d),
                 multiply(th, multiply(th, v, w), z), multiply(th, v, multiply(th, w, z)));
      }
    }
  }
  for (const char* name : {"phi_involution", "phi_counit", "phi_product", "phi_coproduct",
                           "unit_law", "commutativity", "associativity", "frobenius_relation",
                           "counit_law", "theta_phi_invariance"}) {
    rb.flush(name);
  }
  rb.check("phi_unit", "phi(i(1)) = " + phi(th, unit(th)).to_string(),
           phi(th, unit(th)) == unit(th));

  const AlgebraElement klein =
      multiply_at(th, phi_at(th, comultiply(th, unit(th)), 0), 0).to_element();
  rb.check("klein_bottle_axiom",
           "m(phi(x)Id)(Delta(1)) = " + klein.to_string() + ", theta^2 = " + theta_sq.to_string(),
           klein == theta_sq);
  rb.flush("twisted_handle_is_theta_squared");

  const AlgebraElement lhs3 = multiply_at(th, comultiply(th, th_elem), 0).to_element();
  const AlgebraElement theta_cubed = multiply(th, theta_sq, th_elem);
  rb.check("handle_theta_is_theta_cubed",
           "m(Delta(theta)) = " + lhs3.to_string() + ", theta^3 = " + theta_cubed.to_string(),
           lhs3 == theta_cubed);

  const Scalar mb = mu_beta_residual(th), lb = lambda_beta_residual(th);
  rb.check("eq1_beta_annihilation", "mu*beta = " + mb.to_string() + ", lambda*beta = " + lb.to_string(),
           mb.is_zero() && lb.is_zero());
  const Scalar r2 = classification_residual(th);
  rb.check("eq2_classification", "residual = " + r2.to_string(), r2.is_zero());

  const AlgebraElement one = unit(th);
  const AlgebraElement x = basis_element(F, Basis::x);
  const Scalar g11 = counit(th, multiply(th, one, one));
  const Scalar g1x = counit(th, multiply(th, one, x));
  const Scalar gx1 = counit(th, multiply(th, x, one));
  const Scalar gxx = counit(th, multiply(th, x, x));
  const Scalar det = g11 * gxx - g1x * gx1;
  rb.check("counit_nondegenerate", "gram determinant = " + det.to_string(), !det.is_zero());
  const Scalar sphere = counit(th, unit(th));
  rb.check("aspherical", "epsilon(i(1)) = " + sphere.to_string(), sphere.is_zero());
  return rb.take();
}

FourTuResult verify_4tu(const TensorElement& delta_of_one) {
  if (delta_of_one.rank() != 2) {
    throw Error(ErrorKind::dimension_mismatch, "Delta(1) must be a rank-two tensor");
  }
  const Field F = delta_of_one.field();
  TensorElement lhs(F, 4), rhs(F, 4);
  for (const auto& [index, c] : delta_of_one.terms()) {
    const Basis p = index[0], q = index[1];
    lhs.add_term({p, q, Basis::one, Basis::one}, c);
    lhs.add_term({Basis::one, Basis::one, p, q}, c);
    rhs.add_term({p, Basis::one, q, Basis::one}, c);
    rhs.add_term({Basis::one, p, Basis::one, q}, c);
  }
  FourTuResult result;
  result.passed = lhs == rhs;
  if (!result.passed) result.witness = lhs - rhs;
  return result;
}

FourTuResult verify_4tu(const TheoryParams& th) { return verify_4tu(comultiply(th, unit(th))); }

}  // namespace vlh
