#include "disc24/disc_forms.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace disc24 {

namespace {

constexpr std::uint64_t kIsotropicLimit = 1'000'000;
constexpr std::uint64_t kIsomorphismLimit = 10'000;

Int modulus_value(QModulus m) { return m == QModulus::Two ? Int(2) : Int(1); }

std::int64_t to_i64(const Int& x) {
  if (!x.fits_slong_p()) throw Error(ErrorCode::TooLarge, "value does not fit in 64 bits");
  return x.get_si();
}

}  // namespace

Rat reduce_mod(const Rat& x, const Int& m) {
  // x - m * floor(x / m)
  Rat ratio = x / Rat(m);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  Rat out = x - Rat(fl * m);
  out.canonicalize();
  return out;
}

Int FiniteQuadraticForm::order() const {
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

Rat FiniteQuadraticForm::q(const FqfElement& x) const {
  Rat total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    total += Rat(x[i]) * Rat(x[i]) * q_values[i];
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[j] != 0) total += Rat(2) * Rat(x[i]) * Rat(x[j]) * pairings(i, j);
  }
  return reduce_mod(total, modulus_value(modulus));
}

Rat FiniteQuadraticForm::b(const FqfElement& x, const FqfElement& y) const {
  Rat total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) total += Rat(x[i]) * Rat(y[j]) * pairings(i, j);
  }
  return reduce_mod(total, Int(1));
}

FqfElement FiniteQuadraticForm::reduce(FqfElement x) const {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::int64_t d = to_i64(invariant_factors[i]);
    x[i] %= d;
    if (x[i] < 0) x[i] += d;
  }
  return x;
}

std::int64_t FiniteQuadraticForm::element_order(const FqfElement& x) const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::int64_t d = to_i64(invariant_factors[i]);
    ord = std::lcm(ord, d / std::gcd(d, x[i]));
  }
  return ord;
}

std::vector<FqfElement> FiniteQuadraticForm::elements(std::uint64_t limit) const {
  const Int ord = order();
  if (ord > Int(static_cast<unsigned long>(limit)))
    throw Error(ErrorCode::TooLarge, "group order " + ord.get_str() + " exceeds " + std::to_string(limit));
  const std::size_t k = invariant_factors.size();
  std::vector<FqfElement> out;
  out.reserve(ord.get_ui());
  FqfElement x(k, 0);
  while (true) {
    out.push_back(x);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++x[i] < to_i64(invariant_factors[i])) break;
      x[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::string FiniteQuadraticForm::describe() const {
  std::ostringstream os;
  if (invariant_factors.empty()) return "trivial";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << invariant_factors[i].get_str();
  }
  os << " q=[";
  for (std::size_t i = 0; i < q_values.size(); ++i) os << (i ? "," : "") << q_values[i].get_str();
  os << "] mod " << (modulus == QModulus::Two ? 2 : 1) << " b=" << pairings.to_string();
  return os.str();
}

FiniteQuadraticForm discriminant_form(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  if (n == 0) return FiniteQuadraticForm{};
  if (determinant(lattice.gram()) == 0) throw Error(ErrorCode::Degenerate, "lattice is degenerate");

  const SmithForm snf = smith_normal_form(lattice.gram());
  FiniteQuadraticForm form;
  form.modulus = lattice.is_even() ? QModulus::Two : QModulus::One;

  std::vector<RatVector> lifts;
  for (std::size_t i = 0; i < n; ++i) {
    const Int& d = snf.diagonal(i, i);
    if (d == 1) continue;
    RatVector lift(n);
    for (std::size_t r = 0; r < n; ++r) {
      lift[r] = Rat(snf.right(r, i), d);
      lift[r].canonicalize();
    }
    form.invariant_factors.push_back(d);
    lifts.push_back(std::move(lift));
  }
  const std::size_t k = lifts.size();
  form.pairings = RatMatrix(k, k);
  form.generator_lifts = RatMatrix(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    form.generator_lifts.set_row(i, lifts[i]);
    for (std::size_t j = 0; j < k; ++j) form.pairings(i, j) = reduce_mod(lattice.pair(lifts[i], lifts[j]), Int(1));
    form.q_values.push_back(reduce_mod(lattice.pair(lifts[i], lifts[i]), modulus_value(form.modulus)));
  }
  return form;
}

std::vector<FqfElement> isotropic_elements(const FiniteQuadraticForm& form) {
  std::vector<FqfElement> out;
  for (const auto& x : form.elements(kIsotropicLimit))
    if (form.q(x) == 0) out.push_back(x);
  return out;
}

bool fqf_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  if (a.order() > Int(static_cast<unsigned long>(kIsomorphismLimit)) ||
      b.order() > Int(static_cast<unsigned long>(kIsomorphismLimit)))
    throw Error(ErrorCode::TooLarge, "isomorphism search is limited to order 10^4");
  if (a.modulus != b.modulus || a.invariant_factors != b.invariant_factors) return false;
  const std::size_t k = a.invariant_factors.size();
  if (k == 0) return true;

  const std::vector<FqfElement> all_b = b.elements(kIsomorphismLimit);
  const std::vector<FqfElement> all_a = a.elements(kIsomorphismLimit);
  std::vector<FqfElement> gens(k, FqfElement(k, 0));
  for (std::size_t i = 0; i < k; ++i) gens[i][i] = 1;

  std::vector<std::vector<const FqfElement*>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t d = to_i64(a.invariant_factors[i]);
    const Rat qi = a.q(gens[i]);
    for (const auto& y : all_b)
      if (b.element_order(y) == d && b.q(y) == qi) candidates[i].push_back(&y);
  }

  std::vector<const FqfElement*> image(k, nullptr);
  auto bijective = [&]() {
    std::set<FqfElement> seen;
    for (const auto& x : all_a) {
      FqfElement y(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) y[j] += x[i] * (*image[i])[j];
      if (!seen.insert(b.reduce(std::move(y))).second) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    if (i == k) return bijective();
    for (const FqfElement* cand : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (b.b(*image[j], *cand) != a.pairings(j, i)) ok = false;
      if (!ok) continue;
      image[i] = cand;
      if (dfs(i + 1)) return true;
    }
    return false;
  };
  return dfs(0);
}

FiniteQuadraticForm isotropic_quotient(const FiniteQuadraticForm& form, const FqfElement& isotropic) {
  const std::size_t k = form.invariant_factors.size();
  if (isotropic.size() != k) throw Error(ErrorCode::DimensionMismatch, "element length");
  const FqfElement g = form.reduce(isotropic);
  if (form.q(g) != 0) throw Error(ErrorCode::InvalidArgument, "element is not isotropic");

  // H^perp = {c : sum c_i b(e_i, g) in Z}; with b(e_i, g) = a_i / N this is
  // the projection of ker [a_1 ... a_k N].
  std::vector<Rat> beta(k);
  Int common = 1;
  for (std::size_t i = 0; i < k; ++i) {
    FqfElement e(k, 0);
    e[i] = 1;
    beta[i] = form.b(e, g);
    common = lcm(common, beta[i].get_den());
  }
  IntMatrix relation(1, k + 1);
  for (std::size_t i = 0; i < k; ++i) relation(0, i) = beta[i].get_num() * (common / beta[i].get_den());
  relation(0, k) = common;
  IntMatrix ker = kernel_basis(relation);
  IntMatrix proj(ker.rows(), k);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t c = 0; c < k; ++c) proj(r, c) = ker(r, c);
  IntMatrix perp_basis = hermite_row_basis(proj);  // k x k

  IntMatrix sub_gens(k + 1, k);
  for (std::size_t i = 0; i < k; ++i) sub_gens(i, i) = form.invariant_factors[i];
  for (std::size_t i = 0; i < k; ++i) sub_gens(k, i) = g[i];
  IntMatrix rel = to_integer(to_rational(sub_gens) * inverse(to_rational(perp_basis)));

  SmithForm snf = smith_normal_form(rel);
  IntMatrix new_gens = unimodular_inverse(snf.right) * perp_basis;

  FiniteQuadraticForm out;
  out.modulus = form.modulus;
  std::vector<FqfElement> elems;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i) {
    const Int& d = snf.diagonal(i, i);
    if (d == 1) continue;
    out.invariant_factors.push_back(d);
    FqfElement e(k);
    for (std::size_t c = 0; c < k; ++c) {
      Int v;
      mpz_fdiv_r(v.get_mpz_t(), new_gens(i, c).get_mpz_t(), form.invariant_factors[c].get_mpz_t());
      e[c] = v.get_si();
    }
    elems.push_back(std::move(e));
    kept.push_back(i);
  }
  const std::size_t m = elems.size();
  out.pairings = RatMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    out.q_values.push_back(form.q(elems[i]));
    for (std::size_t j = 0; j < m; ++j) out.pairings(i, j) = form.b(elems[i], elems[j]);
  }
  if (form.generator_lifts.rows() == k && k > 0) {
    out.generator_lifts = RatMatrix(m, form.generator_lifts.cols());
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t col = 0; col < form.generator_lifts.cols(); ++col)
          out.generator_lifts(i, col) += Rat(elems[i][c]) * form.generator_lifts(c, col);
  }
  return out;
}

}  // namespace disc24
