#include "disc24/mukai_twisted.hpp"

#include <cctype>
#include <optional>

#include "disc24/disc_forms.hpp"

namespace disc24 {

namespace {

const char* const kBasisNames[kK3Rank] = {"u1", "v1", "u2", "v2", "u3", "v3", "e1", "e2", "e3", "e4", "e5",
                                          "e6", "e7", "e8", "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8"};

std::optional<std::size_t> basis_index(std::string_view name) {
  for (std::size_t i = 0; i < kK3Rank; ++i)
    if (name == kBasisNames[i]) return i;
  return std::nullopt;
}

}  // namespace

bool K3Vector::is_integral() const {
  for (const Rat& x : c)
    if (x.get_den() != 1) return false;
  return true;
}

IntVector K3Vector::to_integer() const {
  if (!is_integral()) throw Error(ErrorCode::InvalidArgument, "K3 vector is not integral");
  IntVector out;
  for (const Rat& x : c) out.push_back(x.get_num());
  return out;
}

K3Vector K3Vector::from_integer(const IntVector& v) {
  if (v.size() != kK3Rank) throw Error(ErrorCode::DimensionMismatch, "K3 vectors have 22 coordinates");
  K3Vector out;
  for (std::size_t i = 0; i < kK3Rank; ++i) out.c[i] = Rat(v[i]);
  return out;
}

K3Vector& K3Vector::operator+=(const K3Vector& o) {
  for (std::size_t i = 0; i < kK3Rank; ++i) c[i] += o.c[i];
  return *this;
}

K3Vector& K3Vector::operator-=(const K3Vector& o) {
  for (std::size_t i = 0; i < kK3Rank; ++i) c[i] -= o.c[i];
  return *this;
}

K3Vector operator*(const Rat& s, K3Vector a) {
  for (auto& x : a.c) x *= s;
  return a;
}

const Lattice& k3_lattice() {
  static const Lattice lattice = [] {
    Lattice u = hyperbolic_plane();
    Lattice l = direct_sum(direct_sum(u, u), u);
    return direct_sum(direct_sum(l, e8_negative()), e8_negative());
  }();
  return lattice;
}

Rat k3_pairing(const K3Vector& a, const K3Vector& b) {
  const IntMatrix& g = k3_lattice().gram();
  Rat total = 0;
  for (std::size_t i = 0; i < kK3Rank; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < kK3Rank; ++j)
      if (b.c[j] != 0 && g(i, j) != 0) total += a.c[i] * Rat(g(i, j)) * b.c[j];
  }
  return total;
}

K3Vector k3_basis(std::string_view name) {
  auto idx = basis_index(name);
  if (!idx) throw Error(ErrorCode::UnknownName, "unknown K3 basis vector '" + std::string(name) + "'");
  K3Vector v;
  v.c[*idx] = 1;
  return v;
}

K3Vector degree_six_class() { return k3_basis("u1") + Rat(3) * k3_basis("v1"); }

BField standard_b_field() { return Rat(1, 2) * (k3_basis("v1") + k3_basis("u2") - k3_basis("v2")); }

namespace {

std::string signed_term(const Rat& coeff, const std::string& name, bool first) {
  std::string out;
  Rat mag = abs(coeff);
  if (coeff < 0)
    out = first ? "-" : " - ";
  else if (!first)
    out = " + ";
  if (name.empty()) return out + mag.get_str();
  if (mag != 1) out += mag.get_str() + (mag.get_den() != 1 ? "*" : "");
  return out + name;
}

}  // namespace

std::string to_string(const K3Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < kK3Rank; ++i) {
    if (v.c[i] == 0) continue;
    out += signed_term(v.c[i], kBasisNames[i], out.empty());
  }
  return out.empty() ? "0" : out;
}

bool MukaiVector::is_integral() const { return r.get_den() == 1 && s.get_den() == 1 && d.is_integral(); }

MukaiVector& MukaiVector::operator+=(const MukaiVector& o) {
  r += o.r;
  d += o.d;
  s += o.s;
  return *this;
}

MukaiVector& MukaiVector::operator-=(const MukaiVector& o) {
  r -= o.r;
  d -= o.d;
  s -= o.s;
  return *this;
}

MukaiVector operator*(const Rat& s, MukaiVector a) {
  a.r *= s;
  a.d = s * a.d;
  a.s *= s;
  return a;
}

std::string to_string(const MukaiVector& v) {
  std::string out;
  if (v.r != 0) out += signed_term(v.r, "", true);
  for (std::size_t i = 0; i < kK3Rank; ++i)
    if (v.d.c[i] != 0) out += signed_term(v.d.c[i], kBasisNames[i], out.empty());
  if (v.s != 0) out += signed_term(v.s, "[pt]", out.empty());
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Parser for sums of named classes

namespace {

class MukaiParser {
 public:
  explicit MukaiParser(std::string_view text) : text_(text) {}

  MukaiVector parse() {
    MukaiVector v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::InvalidArgument,
                "cannot parse Mukai vector '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  MukaiVector expr() {
    Rat sign = 1;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    MukaiVector v = sign * term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  std::optional<Rat> number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    Rat q(Int(std::string(text_.substr(start, pos_ - start))));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("missing denominator");
      Int den(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) fail("zero denominator");
      q /= Rat(den);
    }
    return q;
  }

  MukaiVector term() {
    auto coeff = number();
    if (coeff) {
      if (peek('*')) ++pos_;
      skip_space();
      if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(' ||
                                  text_[pos_] == '[')) {
        return *coeff * factor();
      }
      MukaiVector v;
      v.r = *coeff;
      return v;
    }
    return factor();
  }

  MukaiVector factor() {
    skip_space();
    if (peek('(')) {
      ++pos_;
      MukaiVector v = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return v;
    }
    if (peek('[')) {
      if (text_.substr(pos_, 4) != "[pt]") fail("expected [pt]");
      pos_ += 4;
      MukaiVector v;
      v.s = 1;
      return v;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    MukaiVector v;
    if (name == "pt") {
      v.s = 1;
    } else if (name == "f") {
      v.d = degree_six_class();
    } else if (auto idx = basis_index(name)) {
      v.d.c[*idx] = 1;
    } else {
      fail("unknown symbol '" + std::string(name) + "'");
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MukaiVector parse_mukai(std::string_view text) { return MukaiParser(text).parse(); }

// ---------------------------------------------------------------------------

Rat mukai_pairing(const MukaiVector& x, const MukaiVector& y) {
  return k3_pairing(x.d, y.d) - x.r * y.s - y.r * x.s;
}

MukaiVector exp_b(const MukaiVector& x, const BField& b) {
  MukaiVector out;
  out.r = x.r;
  out.d = x.d + x.r * b;
  out.s = x.s + k3_pairing(b, x.d) + x.r * k3_pairing(b, b) / 2;
  return out;
}

RatMatrix gram_of_mukai(const std::vector<MukaiVector>& vectors) {
  RatMatrix g(vectors.size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) {
      g(i, j) = mukai_pairing(vectors[i], vectors[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

BKernel b_kernel_sublattice(const BField& b, const SublatticeEmbedding& ambient) {
  if (!(ambient.ambient == k3_lattice()))
    throw Error(ErrorCode::InvalidArgument, "ambient sublattice must live in the K3 lattice");
  const std::size_t k = ambient.basis.rows();
  std::vector<Rat> values(k);
  Int common = 1;
  for (std::size_t j = 0; j < k; ++j) {
    values[j] = k3_pairing(b, K3Vector::from_integer(ambient.basis.row(j)));
    common = lcm(common, values[j].get_den());
  }
  if (common == 1) return BKernel{ambient, Int(1)};

  // n . values in Z  <=>  (n, t) in ker [a_1 .. a_k  common]
  IntMatrix relation(1, k + 1);
  Int content = common;
  for (std::size_t j = 0; j < k; ++j) {
    relation(0, j) = values[j].get_num() * (common / values[j].get_den());
    content = gcd(content, relation(0, j));
  }
  relation(0, k) = common;
  IntMatrix ker = kernel_basis(relation);
  IntMatrix proj(ker.rows(), k);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t c = 0; c < k; ++c) proj(r, c) = ker(r, c);
  IntMatrix coeffs = hermite_row_basis(proj);
  return BKernel{SublatticeEmbedding(ambient.ambient, coeffs * ambient.basis), common / content};
}

std::vector<OrthogonalityEntry> orthogonality_report(const MukaiVector& v, const std::vector<MukaiVector>& others) {
  std::vector<OrthogonalityEntry> out;
  for (const auto& o : others) {
    Rat p = mukai_pairing(v, o);
    out.push_back({p, p == 0});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lattice chain

Lattice cubic_disc24_lattice() { return Lattice(IntMatrix{{3, 6}, {6, 20}}); }

Lattice fano_complement_lattice() {
  Lattice l = direct_sum(a2_like(), rank_one(8));
  l = direct_sum(l, hyperbolic_plane());
  return direct_sum(direct_sum(l, e8_negative()), e8_negative());
}

Lattice degree_six_primitive_lattice() {
  Lattice l = direct_sum(rank_one(-6), hyperbolic_plane());
  l = direct_sum(l, hyperbolic_plane());
  return direct_sum(direct_sum(l, e8_negative()), e8_negative());
}

IntMatrix degree_six_certificate() {
  // rows in the (a, b, c) coordinates of A2like + (2)
  IntMatrix block{{2, 2, 3}, {1, 0, 1}, {0, 1, 1}};
  return block.direct_sum(IntMatrix::identity(18));
}

namespace {

std::string invariants_string(const LatticeInvariants& inv) {
  return "rank=" + std::to_string(inv.rank) + " disc=" + inv.disc.get_str() +
         " det_sign=" + std::to_string(inv.det_sign) + " sig=" + to_string(inv.signature) +
         (inv.is_even ? " even" : " odd");
}

}  // namespace

std::vector<Check> fano24_chain(const Fano24Options& options) {
  std::vector<Check> checks;
  const Lattice cubic = cubic_disc24_lattice();
  const LatticeInvariants cubic_inv = lattice_invariants(cubic);

  checks.push_back(compare_check("disc24_gram_det_signature", "det=24 sig=(2,0,0)",
                                 "det=" + Int(cubic_inv.disc * cubic_inv.det_sign).get_str() +
                                     " sig=" + to_string(cubic_inv.signature),
                                 Provenance::Literature, "Gram of <h^2,W> = [[3,6],[6,20]]"));

  // verify_isometry takes images as rows
  const IntMatrix involution_rows = options.involution.transpose();
  checks.push_back(bool_check("involution_is_isometry", verify_isometry(cubic, cubic, involution_rows), "true",
                              verify_isometry(cubic, cubic, involution_rows) ? "true" : "false",
                              Provenance::Literature, "lattice involution h^2->h^2, W->4h^2-W"));

  const IntVector w_image = involution_rows.row(1);
  const bool residual_map = w_image == IntVector{4, -1} && involution_rows.row(0) == IntVector{1, 0};
  const bool squares_to_one = involution_rows * involution_rows == IntMatrix::identity(2);
  checks.push_back(bool_check("involution_sends_W_to_4h2_minus_W", residual_map && squares_to_one,
                              "W->[4,-1], order 2", "W->" + to_string(w_image) + (squares_to_one ? ", order 2" : ", order != 2"),
                              Provenance::Literature, "residuation class [W']=4h^2-[W]"));

  // p = W - 2h^2 is primitive
  const IntVector h2{1, 0};
  const IntVector p{-2, 1};
  const IntMatrix hp = gram_of(cubic, {h2, p});
  checks.push_back(compare_check("h2_p_gram", "[[3,0],[0,8]]", hp.to_string(), Provenance::Literature,
                                 "p = W - 2h^2 Gram"));

  // Fano side: g with (g,g)=6, varpi = image of p with the primitive form negated.
  const Int varpi_norm = kPrimitiveSignFlip * hp(1, 1);
  const Int g_varpi = kPrimitiveSignFlip * hp(0, 1);  // p is primitive, so 0
  const Lattice fano(IntMatrix{{kFanoPolarizationNorm, 0}, {0, 0}} +
                     IntMatrix{{0, g_varpi.get_si()}, {g_varpi.get_si(), varpi_norm.get_si()}});
  checks.push_back(compare_check("fano_g_varpi_gram", "[[6,0],[0,-8]]", fano.gram().to_string(),
                                 Provenance::Literature, "Beauville-Bogomolov form on <g,varpi>"));

  const IntVector g{1, 0};
  const IntVector e{1, 1};
  const IntVector e_prime{1, -1};
  const IntMatrix ge = gram_of(fano, {g, e});
  checks.push_back(compare_check("fano_g_E_gram", "[[6,6],[6,-2]]", ge.to_string(), Provenance::Literature,
                                 "E = g + varpi pairing table"));
  const IntMatrix ee = gram_of(fano, {e, e_prime});
  checks.push_back(compare_check("E_E_prime_pairings", "E^2=-2 E'^2=-2 E.E'=14",
                                 "E^2=" + ee(0, 0).get_str() + " E'^2=" + ee(1, 1).get_str() +
                                     " E.E'=" + ee(0, 1).get_str(),
                                 Provenance::Derived, "E = g + varpi, E' = g - varpi"));

  const Lattice complement = fano_complement_lattice();
  const LatticeInvariants comp_inv = lattice_invariants(complement);
  checks.push_back(compare_check("complement_invariants", "rank=21 disc=24 det_sign=-1 sig=(2,19,0) even",
                                 invariants_string(comp_inv), Provenance::Literature,
                                 "{g,varpi}^perp even, disc 24, signature (2,19)"));

  // glue: the (8) generator is coordinate 2
  GlueVector glue{IntVector(complement.rank(), 0), Int(options.glue_denominator)};
  glue.numerator[2] = 1;
  const Overlattice ext = overlattice_from_glue(complement, glue);
  const LatticeInvariants ext_inv = lattice_invariants(ext.lattice);
  checks.push_back(compare_check("index_two_extension", "index=2 rank=21 disc=6 det_sign=-1 sig=(2,19,0) even",
                                 "index=" + ext.index.get_str() + " " + invariants_string(ext_inv),
                                 Provenance::Literature, "canonical index-two extension"));

  const Lattice expected_ext =
      direct_sum(direct_sum(direct_sum(direct_sum(a2_like(), rank_one(2)), hyperbolic_plane()), e8_negative()),
                 e8_negative());
  checks.push_back(bool_check("extension_gram_is_A2_2_U_E8E8", ext.lattice == expected_ext, "true",
                              ext.lattice == expected_ext ? "true" : "false", Provenance::Literature,
                              "(8) replaced by (2)"));

  const Lattice degree_six = degree_six_primitive_lattice();
  const bool iso = verify_isometry(ext.lattice, degree_six, degree_six_certificate());
  checks.push_back(bool_check("degree_six_isometry_certificate", iso, "true", iso ? "true" : "false",
                              Provenance::Literature, "basis w=3c+2(a+b), u2=c+a, v2=c+b"));

  const FiniteQuadraticForm ext_form = discriminant_form(ext.lattice);
  const FiniteQuadraticForm six_form = discriminant_form(degree_six);
  const bool forms_iso = fqf_isomorphic(ext_form, six_form);
  checks.push_back(bool_check("discriminant_forms_isomorphic", forms_iso, "true",
                              forms_iso ? "true" : "false", Provenance::Derived,
                              "discriminant forms of both sides"));

  const FiniteQuadraticForm comp_form = discriminant_form(complement);
  checks.push_back(compare_check("complement_discriminant_form_order", "24", comp_form.order().get_str(),
                                 Provenance::Derived, "discriminant group of {g,varpi}^perp: " + comp_form.describe()));

  // The glue class in L*/L: solve for it among the isotropic elements.
  bool glue_found = false;
  bool quotient_matches = false;
  for (const FqfElement& x : isotropic_elements(comp_form)) {
    if (comp_form.element_order(x) != options.glue_denominator) continue;
    RatVector lift(complement.rank());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t c = 0; c < complement.rank(); ++c)
        lift[c] += Rat(x[i]) * comp_form.generator_lifts(i, c);
    RatVector diff = lift;
    diff[2] -= Rat(1, options.glue_denominator);
    bool integral = true;
    for (const Rat& q : diff)
      if (q.get_den() != 1) integral = false;
    if (!integral) continue;
    glue_found = true;
    quotient_matches = fqf_isomorphic(isotropic_quotient(comp_form, x), ext_form);
  }
  checks.push_back(bool_check("glue_isotropic_quotient_matches", glue_found && quotient_matches, "true",
                              !glue_found ? "glue class not isotropic" : (quotient_matches ? "true" : "false"),
                              Provenance::Derived, "overlattice <-> isotropic subgroup"));
  return checks;
}

CriterionMatrix criterion_matrix(long m, long a, long s) {
  IntMatrix g{{3, 6, m}, {6, 20, a}, {m, a, s}};
  Int det = determinant(g);
  return CriterionMatrix{std::move(g), std::move(det), (a % 2) != 0};
}

std::vector<Check> p4_embedding_check() {
  std::vector<Check> checks;
  const Lattice va(IntMatrix{{6, 3}, {3, -2}});
  const IntVector v_minus_2a{1, -2};
  checks.push_back(compare_check("v_minus_2a_norm", "-14", va.pair(v_minus_2a, v_minus_2a).get_str(),
                                 Provenance::Literature, "(v-2a, v-2a) = -14"));
  const IntVector v_minus_a{1, -1};
  checks.push_back(compare_check("v_minus_a_norm_control", "-2", va.pair(v_minus_a, v_minus_a).get_str(),
                                 Provenance::Derived, "control on <v,a>"));

  // Picard lattice of the eightfold: (g,g) = 2, varpi from the primitive p with flipped sign
  const Lattice cubic = cubic_disc24_lattice();
  const Int p_norm = cubic.pair(IntVector{-2, 1}, IntVector{-2, 1});
  const Lattice eightfold(IntMatrix{{kEightfoldPolarizationNorm, 0}, {0, Int(kPrimitiveSignFlip * p_norm).get_si()}});
  checks.push_back(compare_check("eightfold_picard_gram", "[[2,0],[0,-8]]", eightfold.gram().to_string(),
                                 Provenance::Literature, "Pic G(X) = <g,varpi>"));
  const IntVector d{3, -2};
  checks.push_back(compare_check("3g_minus_2varpi_norm", "-14", eightfold.pair(d, d).get_str(),
                                 Provenance::Literature, "(3g-2varpi, 3g-2varpi) = -14"));
  const Int with_g = eightfold.pair(d, IntVector{1, 0});
  const Int with_varpi = eightfold.pair(d, IntVector{0, 1});
  const bool even = mpz_even_p(with_g.get_mpz_t()) && mpz_even_p(with_varpi.get_mpz_t());
  checks.push_back(bool_check("3g_minus_2varpi_divisibility", even, "pairings even",
                              "(.,g)=" + with_g.get_str() + " (.,varpi)=" + with_varpi.get_str(),
                              Provenance::Derived, "divisibility 2 of 3g-2varpi"));
  return checks;
}

}  // namespace disc24
