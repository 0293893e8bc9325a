#include "boxtrio/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace boxtrio {
namespace {

constexpr double kCoeffPrune = 1e-14;

int fixed_point_count(const std::array<int, 3>& perm) {
  int n = 0;
  for (int j = 0; j < 3; ++j)
    if (perm[j] == j) ++n;
  return n;
}

// Permutation action on functions over three points, (O f)[j] = f[perm[j]],
// restricted to the plane orthogonal to (1,1,1). The restriction in the basis
// u = (2,-1,-1)/sqrt(6), v = (0,1,-1)/sqrt(2) yields the two-dimensional irrep
// matrices; this pins the partner convention everywhere.
Eigen::Matrix2d plane_matrix(const std::array<int, 3>& perm) {
  Eigen::Matrix3d p = Eigen::Matrix3d::Zero();
  for (int j = 0; j < 3; ++j) p(j, perm[j]) = 1.0;
  Eigen::Matrix<double, 3, 2> b;
  const double s6 = std::sqrt(6.0);
  const double s2 = std::sqrt(2.0);
  b << 2.0 / s6, 0.0, -1.0 / s6, 1.0 / s2, -1.0 / s6, -1.0 / s2;
  return b.transpose() * p * b;
}

// One-time consistency check of the convention stack: irrep matrices must
// form a homomorphism and their traces must reproduce the character table.
bool verify_representation_tables(const std::array<GroupElement, 12>& els) {
  for (IrrepLabel s : irrep_order()) {
    const int dim = irrep_dimension(s);
    for (const GroupElement& g : els) {
      double tr = 0.0;
      if (dim == 1) {
        tr = irrep_matrix_entry(s, g, 0, 0);
      } else {
        tr = irrep_matrix(s, g).trace();
      }
      if (std::abs(tr - character(s, class_of(g))) > 1e-14) {
        throw std::logic_error("irrep matrices disagree with character table");
      }
      for (const GroupElement& h : els) {
        const GroupElement gh = compose(g, h);
        if (dim == 1) {
          const double lhs = irrep_matrix_entry(s, gh, 0, 0);
          const double rhs =
              irrep_matrix_entry(s, g, 0, 0) * irrep_matrix_entry(s, h, 0, 0);
          if (std::abs(lhs - rhs) > 1e-14)
            throw std::logic_error("1D irrep is not a homomorphism");
        } else {
          // O_{compose(g,h)} = O_g O_h, and with column convention
          // O_g e_r = sum_t D(g)_{tr} e_t this reads D(gh) = D(g) D(h).
          const Eigen::Matrix2d lhs = irrep_matrix(s, gh);
          const Eigen::Matrix2d rhs = irrep_matrix(s, g) * irrep_matrix(s, h);
          if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-13)
            throw std::logic_error("2D irrep is not a homomorphism");
        }
      }
    }
  }
  return true;
}

}  // namespace

int permutation_parity(const GroupElement& g) {
  return fixed_point_count(g.perm) == 1 ? -1 : +1;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  GroupElement r;
  for (int j = 0; j < 3; ++j) r.perm[j] = h.perm[g.perm[j]];
  r.sign = g.sign * h.sign;
  return r;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement r;
  for (int j = 0; j < 3; ++j) r.perm[g.perm[j]] = j;
  r.sign = g.sign;
  return r;
}

const std::array<GroupElement, 12>& group_elements() {
  static const std::array<GroupElement, 12> els = [] {
    const std::array<std::array<int, 3>, 6> perms{{
        {0, 1, 2},  // identity
        {1, 2, 0},  // 3-cycle
        {2, 0, 1},  // inverse 3-cycle
        {1, 0, 2},  // swap first two
        {2, 1, 0},  // swap outer two
        {0, 2, 1},  // swap last two
    }};
    std::array<GroupElement, 12> a;
    for (int s = 0; s < 2; ++s)
      for (int p = 0; p < 6; ++p)
        a[6 * s + p] = GroupElement{perms[p], s == 0 ? +1 : -1};
    return a;
  }();
  static const bool ok = verify_representation_tables(els);
  (void)ok;
  return els;
}

ConjClass class_of(const GroupElement& g) {
  const int fixed = fixed_point_count(g.perm);
  if (g.sign > 0) {
    if (fixed == 3) return ConjClass::E;
    if (fixed == 0) return ConjClass::C3;
    return ConjClass::SigmaD;
  }
  if (fixed == 3) return ConjClass::Inversion;
  if (fixed == 0) return ConjClass::S6;
  return ConjClass::C2;
}

int class_size(ConjClass c) {
  switch (c) {
    case ConjClass::E:
    case ConjClass::Inversion: return 1;
    case ConjClass::C3:
    case ConjClass::S6: return 2;
    case ConjClass::C2:
    case ConjClass::SigmaD: return 3;
  }
  return 0;
}

std::string to_string(ConjClass c) {
  switch (c) {
    case ConjClass::E: return "E";
    case ConjClass::C3: return "2C3";
    case ConjClass::C2: return "3C2";
    case ConjClass::Inversion: return "i";
    case ConjClass::S6: return "2S6";
    case ConjClass::SigmaD: return "3sigma_d";
  }
  return "?";
}

const std::array<IrrepLabel, 6>& irrep_order() {
  static const std::array<IrrepLabel, 6> order{IrrepLabel::A1g, IrrepLabel::A2g,
                                               IrrepLabel::Eg,  IrrepLabel::A1u,
                                               IrrepLabel::A2u, IrrepLabel::Eu};
  return order;
}

int irrep_dimension(IrrepLabel s) {
  return (s == IrrepLabel::Eg || s == IrrepLabel::Eu) ? 2 : 1;
}

std::string to_string(IrrepLabel s) {
  switch (s) {
    case IrrepLabel::A1g: return "A1g";
    case IrrepLabel::A2g: return "A2g";
    case IrrepLabel::Eg: return "Eg";
    case IrrepLabel::A1u: return "A1u";
    case IrrepLabel::A2u: return "A2u";
    case IrrepLabel::Eu: return "Eu";
  }
  return "?";
}

IrrepLabel irrep_from_string(const std::string& name) {
  for (IrrepLabel s : irrep_order())
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown irrep label: " + name);
}

double character(IrrepLabel s, ConjClass c) {
  const int col = static_cast<int>(c);  // E, C3, C2, i, S6, sigma_d
  switch (s) {
    case IrrepLabel::A1g: {
      constexpr double row[6] = {1, 1, 1, 1, 1, 1};
      return row[col];
    }
    case IrrepLabel::A2g: {
      constexpr double row[6] = {1, 1, -1, 1, 1, -1};
      return row[col];
    }
    case IrrepLabel::Eg: {
      constexpr double row[6] = {2, -1, 0, 2, -1, 0};
      return row[col];
    }
    case IrrepLabel::A1u: {
      constexpr double row[6] = {1, 1, 1, -1, -1, -1};
      return row[col];
    }
    case IrrepLabel::A2u: {
      constexpr double row[6] = {1, 1, -1, -1, -1, 1};
      return row[col];
    }
    case IrrepLabel::Eu: {
      constexpr double row[6] = {2, -1, 0, -2, 1, 0};
      return row[col];
    }
  }
  return 0.0;
}

Eigen::Matrix2d irrep_matrix(IrrepLabel s, const GroupElement& g) {
  if (irrep_dimension(s) != 2)
    throw std::invalid_argument("irrep_matrix requires a two-dimensional irrep");
  Eigen::Matrix2d m = plane_matrix(g.perm);
  if (s == IrrepLabel::Eu && g.sign < 0) m = -m;
  return m;
}

double irrep_matrix_entry(IrrepLabel s, const GroupElement& g, int t, int r) {
  if (irrep_dimension(s) == 2) return irrep_matrix(s, g)(t, r);
  if (t != 0 || r != 0)
    throw std::invalid_argument("1D irrep has only the (0,0) matrix entry");
  switch (s) {
    case IrrepLabel::A1g: return 1.0;
    case IrrepLabel::A2g: return permutation_parity(g);
    case IrrepLabel::A1u: return permutation_parity(g) * g.sign;
    case IrrepLabel::A2u: return g.sign;
    default: return 0.0;  // unreachable
  }
}

std::pair<ModeTriple, double> act(const GroupElement& g, const ModeTriple& t) {
  ModeTriple r;
  for (int j = 0; j < 3; ++j) r[j] = t[g.perm[j]];
  double factor = 1.0;
  if (g.sign < 0) {
    // Each factor phi_n picks up (-1)^(n+1) under negation.
    const std::int64_t n = t.n1 + t.n2 + t.n3;
    factor = (n % 2 == 1) ? 1.0 : -1.0;
  }
  return {r, factor};
}

StateVector act(const GroupElement& g, const StateVector& v) {
  StateVector out;
  for (const auto& [t, c] : v) {
    auto [r, f] = act(g, t);
    out[r] += f * c;
  }
  return out;
}

double dot(const StateVector& a, const StateVector& b) {
  const StateVector& small = a.size() <= b.size() ? a : b;
  const StateVector& large = a.size() <= b.size() ? b : a;
  double s = 0.0;
  for (const auto& [t, c] : small) {
    auto it = large.find(t);
    if (it != large.end()) s += c * it->second;
  }
  return s;
}

double norm(const StateVector& v) { return std::sqrt(dot(v, v)); }

void accumulate(StateVector& a, double c, const StateVector& b) {
  for (const auto& [t, x] : b) a[t] += c * x;
  for (auto it = a.begin(); it != a.end();) {
    if (std::abs(it->second) < kCoeffPrune)
      it = a.erase(it);
    else
      ++it;
  }
}

StateVector scaled(const StateVector& v, double c) {
  StateVector out;
  for (const auto& [t, x] : v) out[t] = c * x;
  return out;
}

StateVector apply_row_operator(IrrepLabel s, int t, int r, const StateVector& v) {
  const double dim = irrep_dimension(s);
  StateVector out;
  for (const GroupElement& g : group_elements()) {
    const double d = irrep_matrix_entry(s, g, t, r);
    if (d == 0.0) continue;
    accumulate(out, d * dim / 12.0, act(g, v));
  }
  return out;
}

StateVector apply_character_projector(IrrepLabel s, const StateVector& v) {
  const double dim = irrep_dimension(s);
  StateVector out;
  for (const GroupElement& g : group_elements()) {
    const double chi = character(s, class_of(g));
    if (chi == 0.0) continue;
    accumulate(out, chi * dim / 12.0, act(g, v));
  }
  return out;
}

std::vector<IrrepLabel> decompose_multiplet(const Multiplet& m) {
  using L = IrrepLabel;
  std::vector<IrrepLabel> out;
  switch (parity_class(m.representative)) {
    case ParityClass::EvenTriple: out = {L::A1g}; break;
    case ParityClass::OddTriple: out = {L::A2u}; break;
    case ParityClass::EvenPairPlusEven:
    case ParityClass::EvenPlusOddPair: out = {L::A1g, L::Eg}; break;
    case ParityClass::OddPlusEvenPair:
    case ParityClass::OddPairPlusOdd: out = {L::A2u, L::Eu}; break;
    case ParityClass::EvenDistinct:
    case ParityClass::EvenPlusOddDistinct:
      out = {L::A1g, L::A2g, L::Eg, L::Eg};
      break;
    case ParityClass::OddPlusEvenDistinct:
    case ParityClass::OddDistinct:
      out = {L::A1u, L::A2u, L::Eu, L::Eu};
      break;
  }
  int total = 0;
  for (IrrepLabel s : out) total += irrep_dimension(s);
  if (total != m.orbit_size())
    throw std::logic_error("irrep content does not span the multiplet");
  return out;
}

namespace {

StateVector basis_state(const ModeTriple& t) { return StateVector{{t, 1.0}}; }

StateVector combination(std::initializer_list<std::pair<ModeTriple, double>> terms) {
  StateVector v;
  for (const auto& [t, c] : terms) v[t] += c;
  return v;
}

StateVector normalized(const StateVector& v, const char* what) {
  const double n = norm(v);
  if (n < 1e-10)
    throw std::runtime_error(std::string("vanishing symmetry combination: ") + what);
  return scaled(v, 1.0 / n);
}

Eigen::VectorXd orbit_coordinates(const StateVector& v, const Multiplet& m) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(m.orbit_size());
  for (const auto& [t, c] : v) {
    auto it = std::find(m.members.begin(), m.members.end(), t);
    if (it == m.members.end())
      throw std::logic_error("combination leaves the multiplet span");
    x[static_cast<int>(it - m.members.begin())] = c;
  }
  return x;
}

// Orthogonal projector onto the span of the given combinations, in orbit
// coordinates. Returns {projector, rank}.
std::pair<Eigen::MatrixXd, int> span_projector(const std::vector<StateVector>& vs,
                                               const Multiplet& m) {
  const int n = m.orbit_size();
  if (vs.empty()) return {Eigen::MatrixXd::Zero(n, n), 0};
  Eigen::MatrixXd a(n, static_cast<int>(vs.size()));
  for (int k = 0; k < static_cast<int>(vs.size()); ++k)
    a.col(k) = orbit_coordinates(vs[k], m);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv[k] > 1e-10 * sv[0]) ++rank;
  const Eigen::MatrixXd q = svd.matrixU().leftCols(rank);
  return {q * q.transpose(), rank};
}

struct SalcDraft {
  Salc salc;
  bool from_template = true;
};

// The 1D label of the fully symmetric combination: A1g in gerade multiplets,
// A2u in ungerade ones.
IrrepLabel symmetric_label(const std::vector<IrrepLabel>& content) {
  for (IrrepLabel s : content)
    if (s == IrrepLabel::A1g || s == IrrepLabel::A2u) return s;
  throw std::logic_error("multiplet lacks a symmetric combination");
}

}  // namespace

std::vector<Salc> build_salcs(const Multiplet& m) {
  const std::vector<IrrepLabel> content = decompose_multiplet(m);
  const IrrepLabel sym = symmetric_label(content);
  const bool gerade = (sym == IrrepLabel::A1g);
  const IrrepLabel e_label = gerade ? IrrepLabel::Eg : IrrepLabel::Eu;
  const IrrepLabel alt_label = gerade ? IrrepLabel::A2g : IrrepLabel::A1u;

  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  std::vector<SalcDraft> drafts;
  auto add = [&](IrrepLabel s, int row, int copy, StateVector v, bool tmpl) {
    Salc out;
    out.irrep = s;
    out.row = row;
    out.copy = copy;
    out.multiplet = m.representative;
    out.energy_sum = m.energy_sum;
    out.coeffs = std::move(v);
    drafts.push_back({std::move(out), tmpl});
  };

  // Per-irrep template spans, for the cross-check against the character
  // projectors.
  std::map<IrrepLabel, std::vector<StateVector>> template_span;

  const ModeTriple rep = m.representative;
  if (m.orbit_size() == 1) {
    add(sym, 0, 0, basis_state(rep), true);
    template_span[sym].push_back(basis_state(rep));
  } else if (m.orbit_size() == 3) {
    // Two equal values and one distinct; f[j] has the distinct value in slot j.
    const int lone = (rep.n1 == rep.n2) ? rep.n3 : rep.n1;
    const int pair = (rep.n1 == rep.n2) ? rep.n1 : rep.n2;
    const ModeTriple f0{lone, pair, pair};
    const ModeTriple f1{pair, lone, pair};
    const ModeTriple f2{pair, pair, lone};
    const StateVector symm =
        combination({{f0, 1 / s3}, {f1, 1 / s3}, {f2, 1 / s3}});
    const StateVector row0 =
        combination({{f0, 2 / s6}, {f1, -1 / s6}, {f2, -1 / s6}});
    const StateVector row1 = combination({{f1, 1 / s2}, {f2, -1 / s2}});
    add(sym, 0, 0, symm, true);
    add(e_label, 0, 0, row0, true);
    add(e_label, 1, 0, row1, true);
    template_span[sym] = {symm};
    template_span[e_label] = {row0, row1};
  } else {
    // Six distinct arrangements of (a,b,c): the cyclic coset t0,t1,t2 and the
    // anticyclic coset t3,t4,t5.
    const int a = rep.n1, b = rep.n2, c = rep.n3;
    const ModeTriple t0{a, b, c}, t1{c, a, b}, t2{b, c, a};
    const ModeTriple t3{b, a, c}, t4{a, c, b}, t5{c, b, a};
    const StateVector symm = combination({{t0, 1 / s6},
                                          {t1, 1 / s6},
                                          {t2, 1 / s6},
                                          {t3, 1 / s6},
                                          {t4, 1 / s6},
                                          {t5, 1 / s6}});
    const StateVector alt = combination({{t0, 1 / s6},
                                         {t1, 1 / s6},
                                         {t2, 1 / s6},
                                         {t3, -1 / s6},
                                         {t4, -1 / s6},
                                         {t5, -1 / s6}});
    add(sym, 0, 0, symm, true);
    add(alt_label, 0, 0, alt, true);

    // Raw two-dimensional templates. Each pair spans rows of one copy but the
    // two copies are not row-aligned with each other, so they only feed the
    // span cross-check and the seeds below.
    const StateVector p1r0 =
        combination({{t0, 2 / s6}, {t1, -1 / s6}, {t2, -1 / s6}});
    const StateVector p1r1 = combination({{t1, 1 / s2}, {t2, -1 / s2}});
    const StateVector p2r0 =
        combination({{t3, 2 / s6}, {t4, -1 / s6}, {t5, -1 / s6}});
    const StateVector p2r1 = combination({{t5, 1 / s2}, {t4, -1 / s2}});
    template_span[sym] = {symm};
    template_span[alt_label] = {alt};
    template_span[e_label] = {p1r0, p1r1, p2r0, p2r1};

    // Canonical copies: project the seeds onto row 0, orthonormalize across
    // copies, then generate row-1 partners with the transfer operator. This
    // guarantees both copies transform with the same matrices.
    StateVector q0 = normalized(apply_row_operator(e_label, 0, 0, p1r0),
                                "row-0 projection of first seed");
    StateVector q1 = apply_row_operator(e_label, 0, 0, p2r0);
    accumulate(q1, -dot(q0, q1), q0);
    q1 = normalized(q1, "row-0 projection of second seed");
    StateVector q0p = normalized(apply_row_operator(e_label, 1, 0, q0),
                                 "row-1 partner of first copy");
    StateVector q1p = normalized(apply_row_operator(e_label, 1, 0, q1),
                                 "row-1 partner of second copy");
    add(e_label, 0, 0, std::move(q0), false);
    add(e_label, 1, 0, std::move(q0p), false);
    add(e_label, 0, 1, std::move(q1), false);
    add(e_label, 1, 1, std::move(q1p), false);
  }

  // Cross-check: per irrep, the template span must agree with the character
  // projector applied to the orbit.
  for (IrrepLabel s : irrep_order()) {
    std::vector<StateVector> projected;
    for (const ModeTriple& t : m.members) {
      StateVector p = apply_character_projector(s, basis_state(t));
      if (norm(p) > 1e-10) projected.push_back(std::move(p));
    }
    auto it = template_span.find(s);
    const auto [proj_b, rank_b] = span_projector(projected, m);
    if (it == template_span.end()) {
      if (rank_b != 0)
        throw std::runtime_error(
            "character projector finds " + to_string(s) +
            " content absent from the templates in multiplet " +
            to_string(m.representative));
      continue;
    }
    const auto [proj_a, rank_a] = span_projector(it->second, m);
    const int expected =
        irrep_dimension(s) *
        static_cast<int>(std::count(content.begin(), content.end(), s));
    if (rank_a != expected || rank_b != expected)
      throw std::runtime_error("unexpected " + to_string(s) +
                               " rank in multiplet " + to_string(m.representative));
    if ((proj_a - proj_b).cwiseAbs().maxCoeff() > 1e-12)
      throw std::runtime_error("template and projector spans disagree for " +
                               to_string(s) + " in multiplet " +
                               to_string(m.representative));
  }

  // Canonical ordering: irrep, then copy, then row.
  std::stable_sort(drafts.begin(), drafts.end(),
                   [](const SalcDraft& x, const SalcDraft& y) {
                     auto key = [](const Salc& s) {
                       const auto& order = irrep_order();
                       const int oi = static_cast<int>(
                           std::find(order.begin(), order.end(), s.irrep) -
                           order.begin());
                       return std::tuple<int, int, int>(oi, s.copy, s.row);
                     };
                     return key(x.salc) < key(y.salc);
                   });

  // Orthonormality. Template-generated coefficients are exact rational times
  // sqrt(k) values, so they get the tighter tolerance.
  for (size_t i = 0; i < drafts.size(); ++i) {
    for (size_t j = i; j < drafts.size(); ++j) {
      const double g = dot(drafts[i].salc.coeffs, drafts[j].salc.coeffs);
      const double want = (i == j) ? 1.0 : 0.0;
      const double tol =
          (drafts[i].from_template && drafts[j].from_template) ? 1e-14 : 1e-12;
      if (std::abs(g - want) > tol)
        throw std::runtime_error("symmetry combinations not orthonormal in " +
                                 to_string(m.representative));
    }
  }

  // Transformation law, rowwise: O_g s_{r,c} = sum_t D(g)_{tr} s_{t,c}.
  for (size_t i = 0; i < drafts.size();) {
    const Salc& head = drafts[i].salc;
    const int dim = irrep_dimension(head.irrep);
    const double tol = (dim == 1) ? 1e-14 : 1e-12;
    std::vector<const Salc*> rows(dim);
    for (int r = 0; r < dim; ++r) {
      const Salc& s = drafts[i + r].salc;
      if (s.irrep != head.irrep || s.copy != head.copy || s.row != r)
        throw std::logic_error("rows of one copy are not contiguous");
      rows[r] = &s;
    }
    for (const GroupElement& g : group_elements()) {
      for (int r = 0; r < dim; ++r) {
        StateVector lhs = act(g, rows[r]->coeffs);
        for (int t = 0; t < dim; ++t)
          accumulate(lhs, -irrep_matrix_entry(head.irrep, g, t, r),
                     rows[t]->coeffs);
        double worst = 0.0;
        for (const auto& [_, resid] : lhs) worst = std::max(worst, std::abs(resid));
        if (worst > tol)
          throw std::runtime_error(
              "combination does not transform by " + to_string(head.irrep) +
              " in multiplet " + to_string(m.representative));
      }
    }
    i += dim;
  }

  std::vector<Salc> out;
  out.reserve(drafts.size());
  for (auto& d : drafts) out.push_back(std::move(d.salc));
  return out;
}

std::array<int, 6> salc_census(std::int64_t cutoff) {
  std::array<int, 6> census{};
  for (const Multiplet& m : enumerate_multiplets(cutoff)) {
    for (IrrepLabel s : decompose_multiplet(m)) {
      const auto& order = irrep_order();
      const int oi = static_cast<int>(
          std::find(order.begin(), order.end(), s) - order.begin());
      ++census[oi];
    }
  }
  return census;
}

}  // namespace boxtrio
