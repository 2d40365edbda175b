#include "mp2/weil_oracle.hpp"

#include <algorithm>

#include "mp2/intmath.hpp"

namespace mp2 {

const CycNumber& TruncatedEvenFunction::at(int i) const {
  if (i < i_min) throw DomainError("index below the support bound");
  if (i > i_max) return tail;
  return vals[i - i_min];
}

bool TruncatedEvenFunction::is_zero_function() const {
  if (!tail.is_zero()) return false;
  return std::all_of(vals.begin(), vals.end(),
                     [](const CycNumber& v) { return v.is_zero(); });
}

namespace {

int ceil_div2(int x) {
  // ceil(x/2) for possibly negative x
  return x >= 0 ? (x + 1) / 2 : -((-x) / 2);
}

UnitCharacter equivariance_twist(const FieldConfig& cfg, const WeilRepConfig& rep) {
  QuadraticCharacter chi{rep.chi};
  return chi.unit_restriction(cfg).product(cfg, rep.eta.inverse(cfg));
}

AdditiveCharacter model_psi_prime(const FieldConfig& cfg, const WeilRepConfig& rep) {
  return AdditiveCharacter::psi_eps(cfg, rep.eps)
      .twist(square_class_rep(cfg, rep.chi));
}

struct ModelSystem {
  int i_min;
  int i_max;
  bool tail_free;
  std::vector<std::vector<CycNumber>> rows;
  int num_cols;
};

// The Gauss coefficients only depend on the unit class b and the total
// valuation j + i, so they are cached across rows and truncation restarts.
struct GaussCoeffCache {
  std::map<std::pair<i64, int>, CycNumber> values;
  const CycNumber& get(const FieldConfig& cfg, const CycContextPtr& ctx,
                       const UnitCharacter& twist, const AdditiveCharacter& psi_p,
                       i64 b, int t) {
    auto key = std::make_pair(b, t);
    auto it = values.find(key);
    if (it != values.end()) return it->second;
    Rational arg = Rational(2) * Rational(b) * Rational(cfg.p()).pow(t);
    CycNumber g = gauss_g_oracle(cfg, ctx, twist, psi_p.twist(arg));
    return values.emplace(key, std::move(g)).first->second;
  }
};

// Constraint rows from the Fourier-side condition: for every shell valuation
// j <= ceil((c(psi') - m - eps)/2) - 1 and unit class b in {1, xi},
//   sum_i q^{-i} phi(pi^i) g(twist, psi'_{2 b pi^{j+i}}) = 0.
// Rows below j_floor vanish identically (the tail telescopes), so only
// finitely many rows are materialized.
ModelSystem build_system(const FieldConfig& cfg, const CycContextPtr& ctx,
                         const WeilRepConfig& rep, int m, int i_max,
                         GaussCoeffCache& cache) {
  ModelSystem sys;
  UnitCharacter twist = equivariance_twist(cfg, rep);
  AdditiveCharacter psi_p = model_psi_prime(cfg, rep);
  int c_psi = psi_p.conductor();
  int nu = c_psi + rep.eps;
  sys.i_min = ceil_div2(nu);
  sys.i_max = i_max;
  sys.tail_free = twist.is_trivial();
  int n_vals = i_max - sys.i_min + 1;
  sys.num_cols = n_vals + (sys.tail_free ? 1 : 0);

  int j_top = ceil_div2(c_psi - m - rep.eps) - 1;
  // Rows below this are identically zero: for ramified twists the single
  // surviving Gauss coefficient sits at i = c(psi') - j - c(twist), and for
  // the trivial twist the tail telescopes once that index passes i_max.
  int j_floor = c_psi - twist.conductor() - i_max - 1;
  Rational q(cfg.p());

  for (int j = j_top; j >= j_floor; --j) {
    for (i64 b : {(i64)1, cfg.xi()}) {
      std::vector<CycNumber> row(sys.num_cols, CycNumber(ctx));
      bool nonzero = false;
      for (int i = sys.i_min; i <= i_max; ++i) {
        const CycNumber& g = cache.get(cfg, ctx, twist, psi_p, b, j + i);
        if (g.is_zero()) continue;
        row[i - sys.i_min] = g * q.pow(-i);
        nonzero = true;
      }
      if (sys.tail_free) {
        // All tail shells have conductor <= 0 here, so each contributes the
        // full unit-volume 1 - q^{-1}; the geometric sum is q^{-(i_max+1)}.
        row[n_vals] = CycNumber::from_rational(ctx, q.pow(-(i_max + 1)));
        nonzero = true;
      }
      if (nonzero) sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

}  // namespace

int cyc_kernel_dimension(std::vector<std::vector<CycNumber>> rows, int num_cols,
                         const CycContextPtr& ctx) {
  (void)ctx;
  int rank = 0;
  size_t pivot_row = 0;
  for (int col = 0; col < num_cols && pivot_row < rows.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    CycNumber inv = rows[pivot_row][col].inverse();
    for (int c = col; c < num_cols; ++c) rows[pivot_row][c] = rows[pivot_row][c] * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      CycNumber f = rows[r][col];
      for (int c = col; c < num_cols; ++c)
        rows[r][c] = rows[r][c] - f * rows[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return num_cols - rank;
}

namespace {

// Returns the kernel dimension and optionally a basis of solutions.
int solve_model(const FieldConfig& cfg, const CycContextPtr& ctx,
                const WeilRepConfig& rep, int m, int i_max,
                GaussCoeffCache& cache,
                std::vector<TruncatedEvenFunction>* basis_out) {
  ModelSystem sys = build_system(cfg, ctx, rep, m, i_max, cache);
  if (basis_out == nullptr)
    return cyc_kernel_dimension(sys.rows, sys.num_cols, ctx);

  // Reduced row echelon form with column bookkeeping for a kernel basis.
  auto rows = sys.rows;
  int n = sys.num_cols;
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  size_t pr = 0;
  for (int col = 0; col < n && pr < rows.size(); ++col) {
    size_t sel = pr;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pr], rows[sel]);
    CycNumber inv = rows[pr][col].inverse();
    for (int c = 0; c < n; ++c) rows[pr][c] = rows[pr][c] * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || rows[r][col].is_zero()) continue;
      CycNumber f = rows[r][col];
      for (int c = 0; c < n; ++c) rows[r][c] = rows[r][c] - f * rows[pr][c];
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++pr;
  }
  UnitCharacter twist = equivariance_twist(cfg, rep);
  basis_out->clear();
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<CycNumber> sol(n, CycNumber(ctx));
    sol[free_col] = CycNumber::from_rational(ctx, Rational(1));
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
      sol[pivot_col_of_row[r]] = -rows[r][free_col];
    TruncatedEvenFunction f;
    f.i_min = sys.i_min;
    f.i_max = i_max;
    f.unit_twist = twist;
    f.vals.assign(sol.begin(), sol.begin() + (i_max - sys.i_min + 1));
    f.tail = sys.tail_free ? sol[n - 1] : CycNumber(ctx);
    basis_out->push_back(std::move(f));
  }
  return n - (int)pr;
}

int oracle_impl(const FieldConfig& cfg, const CycContextPtr& ctx,
                const WeilRepConfig& rep, int m,
                std::vector<TruncatedEvenFunction>* basis_out) {
  if (m < 0) throw DomainError("level must be >= 0");
  QuadraticCharacter chi{rep.chi};
  // Evenness forces phi = 0 unless eta(-1) = chi(-1).
  if (rep.eta.sign_at_minus_one(cfg) != chi.sign_at_minus_one(cfg)) {
    if (basis_out) basis_out->clear();
    return 0;
  }
  AdditiveCharacter psi_p = model_psi_prime(cfg, rep);
  int i_min = ceil_div2(psi_p.conductor() + rep.eps);

  GaussCoeffCache cache;
  int prev = -1, stable = 0;
  int start = i_min + 2;
  for (int i_max = start; i_max <= start + m + 14; ++i_max) {
    int dim = solve_model(cfg, ctx, rep, m, i_max, cache, nullptr);
    if (dim == prev) {
      if (++stable >= 2) {
        if (basis_out) solve_model(cfg, ctx, rep, m, i_max, cache, basis_out);
        return dim;
      }
    } else {
      prev = dim;
      stable = 0;
    }
  }
  throw StabilizationError("even Weil fixed-space dimension did not stabilize");
}

}  // namespace

int even_weil_fixed_dim_oracle(const FieldConfig& cfg, const CycContextPtr& ctx,
                               const WeilRepConfig& rep, int m) {
  return oracle_impl(cfg, ctx, rep, m, nullptr);
}

std::vector<TruncatedEvenFunction> even_weil_fixed_space_basis(
    const FieldConfig& cfg, const CycContextPtr& ctx, const WeilRepConfig& rep, int m) {
  std::vector<TruncatedEvenFunction> basis;
  oracle_impl(cfg, ctx, rep, m, &basis);
  return basis;
}

TruncatedEvenFunction weil_action_B(const FieldConfig& cfg, const CycContextPtr& ctx,
                                    const WeilRepConfig& rep, WeilGenerator gen,
                                    const Rational& param,
                                    const TruncatedEvenFunction& phi) {
  AdditiveCharacter psi = AdditiveCharacter::psi_eps(cfg, rep.eps);
  AdditiveCharacter psi_p = model_psi_prime(cfg, rep);
  TruncatedEvenFunction out = phi;

  if (gen == WeilGenerator::TorusUnit) {
    ScaledPAdic a = ScaledPAdic::from_rational(cfg.p(), param);
    if (!a.is_unit()) throw DomainError("outside truncated model: non-unit torus");
    int ge = weil_index_unit_sign(cfg, ctx, a, psi);
    int gp = weil_index_unit_sign(cfg, ctx, a, psi_p);
    // (t(a), s^eps(t(a))) acts by gamma(a,psi^eps) gamma(a,psi')^{-1} phi(a y).
    CycNumber factor =
        phi.unit_twist.eval(cfg, ctx, a.unit_residue(cfg.precision())) *
        Rational(ge * gp);
    for (auto& v : out.vals) v = v * factor;
    out.tail = out.tail * factor;
    return out;
  }

  // UpperUnipotent n(b), b in p^{-eps}: multiplies shell i by psi'(b u^2 pi^{2i}),
  // which must not depend on the unit u wherever phi is nonzero.
  Rational b = param;
  if (!b.is_zero() && b.valuation(cfg.p()) < -rep.eps)
    throw DomainError("unipotent parameter outside p^{-eps}");
  auto shell_factor = [&](int i) -> CycNumber {
    Rational base = b * Rational(cfg.p()).pow(2 * i);
    CycNumber ref = psi_p.eval(ctx, base);
    // compare against all unit squares at sufficient depth
    int ordb = b.is_zero() ? 1 << 20 : b.valuation(cfg.p());
    int K = std::max(1, psi_p.conductor() - ordb - 2 * i);
    if (K <= cfg.precision()) {
      i64 pK = cfg.p_pow(K);
      for (i64 u = 1; u < pK; ++u) {
        if (u % cfg.p() == 0) continue;
        CycNumber v = psi_p.eval(ctx, base * Rational(u) * Rational(u));
        if (!(v == ref))
          throw DomainError("outside truncated model: unipotent action leaves the family");
      }
    }
    return ref;
  };
  for (int i = phi.i_min; i <= phi.i_max; ++i) {
    if (phi.vals[i - phi.i_min].is_zero()) continue;
    out.vals[i - phi.i_min] = phi.vals[i - phi.i_min] * shell_factor(i);
  }
  if (!phi.tail.is_zero()) {
    // the factor must be 1 on every tail shell
    int ordb = b.is_zero() ? 1 << 20 : b.valuation(cfg.p());
    if (ordb + 2 * (phi.i_max + 1) < psi_p.conductor())
      throw DomainError("outside truncated model: unipotent action on the tail");
  }
  return out;
}

}  // namespace mp2
