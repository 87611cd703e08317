#include "sympspin/curvature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "sympspin/errors.hpp"
#include "sympspin/exact_matrix.hpp"
#include "sympspin/sampling.hpp"

namespace sympspin {

namespace {

void require_rank4_lower(const Tensor& r) {
  if (r.rank() != 4 || r.dim() % 2 != 0) throw DimensionMismatch("expected a rank-4 tensor over a 2l-dimensional space");
  for (auto v : r.slots()) {
    if (v != Variance::Lower) throw InvalidArgument("curvature tensors are stored with all indices lower");
  }
}

template <class Pred>
IdentityCheck scan(int n, Pred&& violated) {
  IdentityCheck out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (violated(i, j, k, l)) {
            out.holds = false;
            out.witness = std::array<int, 4>{i, j, k, l};
            return out;
          }
  return out;
}

std::string describe_check(const char* name, const IdentityCheck& c) {
  std::ostringstream os;
  os << name << ": " << (c.holds ? "ok" : "FAILED");
  if (c.witness) {
    // 1-based for humans.
    const auto& w = *c.witness;
    os << " at (" << w[0] + 1 << "," << w[1] + 1 << "," << w[2] + 1 << "," << w[3] + 1 << ")";
  }
  return os.str();
}

using Row = SparseRow<Rational>;

std::size_t flat4(int n, int i, int j, int k, int l) {
  return ((static_cast<std::size_t>(i) * n + j) * n + k) * n + l;
}

void add_entry(Row& row, std::size_t col, const Rational& value) {
  auto [it, inserted] = row.try_emplace(col);
  it->second += value;
  if (is_zero(it->second)) row.erase(it);
}

void add_defining_constraints(SparseEchelon<Rational>& system, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Row antisym;
          add_entry(antisym, flat4(n, i, j, k, l), 1);
          add_entry(antisym, flat4(n, i, j, l, k), 1);
          system.add_row(std::move(antisym));

          Row bianchi;
          add_entry(bianchi, flat4(n, i, j, k, l), 1);
          add_entry(bianchi, flat4(n, i, k, l, j), 1);
          add_entry(bianchi, flat4(n, i, l, j, k), 1);
          system.add_row(std::move(bianchi));

          Row sym;
          add_entry(sym, flat4(n, i, j, k, l), 1);
          add_entry(sym, flat4(n, j, i, k, l), -1);
          system.add_row(std::move(sym));
        }
}

constexpr std::array<std::array<int, 2>, 6> kTracePairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// sum_{c,d} omega^{cd} R[... c at slot p ... d at slot q ...] = 0 for every assignment of the other slots.
// Equivalent to the vanishing of the raised trace, since raising the free slots is invertible.
void add_trace_constraints(SparseEchelon<Rational>& system, const SymplecticSpace& space) {
  const int n = space.dim();
  for (const auto& [p, q] : kTracePairs) {
    int free_slots[2];
    int f = 0;
    for (int s = 0; s < 4; ++s)
      if (s != p && s != q) free_slots[f++] = s;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Row row;
        for (int c = 0; c < n; ++c)
          for (int d : space.upper_support(c)) {
            int idx[4];
            idx[p] = c;
            idx[q] = d;
            idx[free_slots[0]] = a;
            idx[free_slots[1]] = b;
            add_entry(row, flat4(n, idx[0], idx[1], idx[2], idx[3]), space.omega_upper(c, d));
          }
        system.add_row(std::move(row));
      }
  }
}

ConstraintSpace build_space(int l, bool trace_free) {
  const SymplecticSpace& space = standard_space(l);
  const int n = space.dim();
  SparseEchelon<Rational> system(static_cast<std::size_t>(n) * n * n * n);
  add_defining_constraints(system, n);
  if (trace_free) add_trace_constraints(system, space);

  ConstraintSpace out;
  out.l = l;
  for (const auto& v : system.nullspace_basis()) {
    Tensor t = Tensor::covariant(n, 4);
    for (const auto& [col, value] : v) t.flat(col) = value;
    out.basis.push_back(std::move(t));
  }
  return out;
}

const ConstraintSpace& cached_space(int l, bool trace_free) {
  if (l < 1) throw InvalidArgument("constraint spaces need l >= 1");
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::unique_ptr<ConstraintSpace>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{l, trace_free}];
  if (!slot) slot = std::make_unique<ConstraintSpace>(build_space(l, trace_free));
  return *slot;
}

Tensor random_combination(const ConstraintSpace& space, std::uint64_t seed) {
  const int n = 2 * space.l;
  Tensor out = Tensor::covariant(n, 4);
  const ExactVector coeffs = sample_rational_vector(space.dimension(), seed, 5);
  for (std::size_t b = 0; b < space.basis.size(); ++b) {
    const Rational& c = coeffs[b].re();
    if (is_zero(c)) continue;
    Tensor term = space.basis[b];
    out += term.scale(c);
  }
  return out;
}

}  // namespace

std::string SymmetryReport::describe() const {
  return describe_check("antisymmetry", antisymmetry) + "; " + describe_check("bianchi", bianchi) + "; " +
         describe_check("symmetry", symmetry) + "; " + describe_check("extended_bianchi", extended_bianchi);
}

SymmetryReport check_symmetries(const Tensor& r) {
  require_rank4_lower(r);
  const int n = r.dim();
  auto at = [&](int i, int j, int k, int l) -> const Rational& { return r({i, j, k, l}); };
  SymmetryReport report;
  report.antisymmetry = scan(n, [&](int i, int j, int k, int l) { return at(i, j, k, l) != -at(i, j, l, k); });
  report.bianchi = scan(n, [&](int i, int j, int k, int l) {
    return !is_zero(Rational(at(i, j, k, l) + at(i, k, l, j) + at(i, l, j, k)));
  });
  report.symmetry = scan(n, [&](int i, int j, int k, int l) { return at(i, j, k, l) != at(j, i, k, l); });
  report.extended_bianchi = scan(n, [&](int i, int j, int k, int l) {
    return !is_zero(Rational(at(i, j, k, l) + at(j, k, l, i) + at(k, l, i, j) + at(l, i, j, k)));
  });
  return report;
}

// --- value types ----------------------------------------------------------------------

CurvatureTensor::CurvatureTensor(Tensor entries) : entries_(std::move(entries)) {
  require_rank4_lower(entries_);
  SymmetryReport report = check_symmetries(entries_);
  if (!report.defining()) throw SymmetryViolation("not a curvature tensor: " + report.describe());
}

CurvatureTensor CurvatureTensor::zero(int l) { return CurvatureTensor(Tensor::covariant(2 * l, 4)); }

RicciTensor::RicciTensor(Tensor entries) : entries_(std::move(entries)) {
  if (entries_.rank() != 2 || entries_.dim() % 2 != 0) throw InvalidArgument("Ricci tensor must be 2l x 2l");
  for (auto v : entries_.slots()) {
    if (v != Variance::Lower) throw InvalidArgument("Ricci tensor is stored with lower indices");
  }
  const int n = entries_.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (entries_({i, j}) != entries_({j, i})) throw InvalidArgument("Ricci tensor must be symmetric");
}

RicciTensor RicciTensor::zero(int l) { return RicciTensor(Tensor::covariant(2 * l, 2)); }

std::array<Tensor, 6> omega_traces(const Tensor& lower4, const SymplecticSpace& space) {
  require_rank4_lower(lower4);
  const int n = space.dim();
  const Tensor upper = with_variance(lower4, std::vector<Variance>(4, Variance::Upper), space);
  std::array<Tensor, 6> traces;
  for (std::size_t t = 0; t < kTracePairs.size(); ++t) {
    const auto [p, q] = kTracePairs[t];
    int free_slots[2];
    int f = 0;
    for (int s = 0; s < 4; ++s)
      if (s != p && s != q) free_slots[f++] = s;
    Tensor out(n, {Variance::Upper, Variance::Upper});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Rational acc;
        for (int c = 0; c < n; ++c)
          for (int d : space.lower_support(c)) {
            int idx[4];
            idx[p] = c;
            idx[q] = d;
            idx[free_slots[0]] = a;
            idx[free_slots[1]] = b;
            acc += upper({idx[0], idx[1], idx[2], idx[3]}) * space.omega_lower(c, d);
          }
        out({a, b}) = std::move(acc);
      }
    traces[t] = std::move(out);
  }
  return traces;
}

bool is_trace_free(const Tensor& lower4, const SymplecticSpace& space) {
  for (const auto& t : omega_traces(lower4, space))
    if (!t.is_zero()) return false;
  return true;
}

WeylTensor::WeylTensor(CurvatureTensor curvature) : curvature_(std::move(curvature)) {
  if (!is_trace_free(curvature_.tensor(), standard_space(curvature_.l()))) {
    throw SymmetryViolation("Weyl tensor must be totally trace-free");
  }
}

// --- constraint spaces ---------------------------------------------------------------

const ConstraintSpace& curvature_space(int l) { return cached_space(l, false); }
const ConstraintSpace& weyl_space(int l) { return cached_space(l, true); }

CurvatureTensor random_curvature(int l, std::uint64_t seed) {
  return CurvatureTensor(random_combination(curvature_space(l), seed));
}

WeylTensor random_weyl(int l, std::uint64_t seed) {
  return WeylTensor(CurvatureTensor(random_combination(weyl_space(l), seed)));
}

RicciTensor random_ricci(int l, std::uint64_t seed) {
  const int n = 2 * l;
  const ExactVector coeffs = sample_rational_vector(static_cast<std::size_t>(n * (n + 1) / 2), seed, 5);
  Tensor t = Tensor::covariant(n, 2);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++k) {
      t({i, j}) = coeffs[k].re();
      t({j, i}) = coeffs[k].re();
    }
  return RicciTensor(std::move(t));
}

// --- Ricci / Weyl ----------------------------------------------------------------------

RicciTensor ricci_of(const CurvatureTensor& r) {
  const SymplecticSpace& space = standard_space(r.l());
  const int n = space.dim();
  Tensor sigma = Tensor::covariant(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational acc;
      for (int m = 0; m < n; ++m)
        for (int a : space.upper_support(m)) acc += space.omega_upper(m, a) * r(a, j, m, i);
      sigma({i, j}) = std::move(acc);
    }
  return RicciTensor(std::move(sigma));
}

RicciTensor ricci_of(const Tensor& r) { return ricci_of(CurvatureTensor(r)); }

CurvatureTensor sigma_tilde_of(const RicciTensor& sigma) {
  const SymplecticSpace& space = standard_space(sigma.l());
  const int n = space.dim();
  const Rational prefactor(1, 2 * (sigma.l() + 1));
  auto w = [&](int a, int b) -> const Rational& { return space.omega_lower(a, b); };
  auto s = [&](int a, int b) -> const Rational& { return sigma(a, b); };
  Tensor out = Tensor::covariant(n, 4);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational v = w(i, l) * s(j, k) - w(i, k) * s(j, l) + w(j, l) * s(i, k) - w(j, k) * s(i, l) +
                       2 * s(i, j) * w(k, l);
          if (!is_zero(v)) out({i, j, k, l}) = prefactor * v;
        }
  return CurvatureTensor(std::move(out));
}

WeylTensor weyl_of(const CurvatureTensor& r) {
  return WeylTensor(r - sigma_tilde_of(ricci_of(r)));
}

}  // namespace sympspin
