#include "wahl/gaussmap/gaussian.hpp"

#include <algorithm>
#include <string>

#include "wahl/errors.hpp"
#include "wahl/exactlin/kernels.hpp"

namespace wahl::gaussmap {

using curves::CICurve;
using curves::CIType;
using exactlin::Echelon;
using exactlin::FpMatrix;
using exactlin::Prime;
using gradedring::Exponents;
using gradedring::Form;
using gradedring::GradedRing;
using gradedring::QuotientPiece;

std::vector<Form> gaussian_tuple_forms(const GradedRing& ring, Prime p,
                                       const Form& F, const Form& G) {
  std::vector<Form> tuple;
  tuple.reserve(static_cast<std::size_t>(ring.nvars()));
  for (int v = 0; v < ring.nvars(); ++v) {
    const Form fdg = multiply(ring, p, F, partial_derivative(ring, p, G, v));
    const Form gdf = multiply(ring, p, G, partial_derivative(ring, p, F, v));
    tuple.push_back(add(ring, p, fdg, scale(ring, p, gdf, p.value - 1)));
  }
  return tuple;
}

std::vector<std::uint64_t> gaussian_tuple(const CICurve& curve, const Form& F,
                                          const Form& G) {
  const int m = F.degree + G.degree;
  const QuotientPiece& target = curve.piece(m - 1);
  const auto comps =
      gaussian_tuple_forms(curve.ring(), curve.prime(), F, G);
  std::vector<std::uint64_t> row;
  row.reserve(comps.size() * target.quotient_dim);
  for (const Form& comp : comps) {
    const auto coords = target.reduce(curve.prime(), comp);
    row.insert(row.end(), coords.begin(), coords.end());
  }
  return row;
}

namespace {

// Tuple of two monomials x^E, x^F: component v is a single monomial
// x^{E+F-e_v} with coefficient F_v - E_v, reduced into standard coordinates.
void monomial_tuple_row(const CICurve& curve, int a, int b,
                        const Exponents& me, const Exponents& mf,
                        std::span<std::uint64_t> row) {
  const GradedRing& ring = curve.ring();
  const Prime p = curve.prime();
  const QuotientPiece& target = curve.piece(a + b - 1);
  const std::size_t q = target.quotient_dim;
  std::fill(row.begin(), row.end(), 0);
  for (int v = 0; v < ring.nvars(); ++v) {
    const auto sv = static_cast<std::size_t>(v);
    const int ea = me[sv], eb = mf[sv];
    if (ea == eb) continue;
    Exponents prod = me;
    for (int w = 0; w < ring.nvars(); ++w)
      prod[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>(
          prod[static_cast<std::size_t>(w)] + mf[static_cast<std::size_t>(w)]);
    prod[sv] = static_cast<std::uint8_t>(prod[sv] - 1);
    const std::uint64_t coeff =
        eb > ea ? static_cast<std::uint64_t>(eb - ea)
                : p.value - static_cast<std::uint64_t>(ea - eb);
    target.accumulate_nf(p, ring.index_of(a + b - 1, prod), coeff,
                         row.subspan(sv * q, q));
  }
}

std::size_t tuple_width(const CICurve& curve, int m) {
  return static_cast<std::size_t>(curve.ring().nvars()) *
         curve.piece(m - 1).quotient_dim;
}

}  // namespace

Form random_ideal_element(const CICurve& curve, int a, Rng& rng) {
  const GradedRing& ring = curve.ring();
  const Prime p = curve.prime();
  Form q = gradedring::zero_form(ring, a);
  for (const Form& gen : curve.generators()) {
    if (gen.degree > a) continue;
    const Form cof = gradedring::random_form(ring, p, a - gen.degree, rng);
    q = add(ring, p, q, multiply(ring, p, cof, gen));
  }
  return q;
}

FpMatrix conormal_rows(const CICurve& curve, int m) {
  if (m < 1) return FpMatrix(0, 0);
  const GradedRing& ring = curve.ring();
  const Prime p = curve.prime();
  const QuotientPiece& target = curve.piece(m - 1);
  const std::size_t q = target.quotient_dim;
  const std::size_t width = tuple_width(curve, m);

  FpMatrix out(0, width);
  std::vector<std::uint64_t> row(width);
  for (const Form& gen : curve.generators()) {
    if (gen.degree > m) continue;
    std::vector<Form> dgen;
    dgen.reserve(static_cast<std::size_t>(ring.nvars()));
    for (int v = 0; v < ring.nvars(); ++v)
      dgen.push_back(partial_derivative(ring, p, gen, v));
    const QuotientPiece& cof = curve.piece(m - gen.degree);
    const auto& cof_monos = ring.monomials(m - gen.degree);
    for (std::uint32_t sc : cof.standard_cols) {
      const Exponents& c = cof_monos[sc];
      std::fill(row.begin(), row.end(), 0);
      for (int v = 0; v < ring.nvars(); ++v) {
        const Form& dq = dgen[static_cast<std::size_t>(v)];
        const auto& dmonos = ring.monomials(dq.degree);
        auto seg = std::span<std::uint64_t>(row).subspan(
            static_cast<std::size_t>(v) * q, q);
        for (std::size_t t = 0; t < dq.coeffs.size(); ++t) {
          if (!dq.coeffs[t]) continue;
          Exponents e = c;
          for (int w = 0; w < ring.nvars(); ++w)
            e[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>(
                e[static_cast<std::size_t>(w)] +
                dmonos[t][static_cast<std::size_t>(w)]);
          target.accumulate_nf(p, ring.index_of(m - 1, e), dq.coeffs[t], seg);
        }
      }
      out.push_row(row);
    }
  }
  return out;
}

FpMatrix wedge_rows(const CICurve& curve, int a) {
  const QuotientPiece& base = curve.piece(a);
  const auto& monos = curve.ring().monomials(a);
  const std::size_t width = tuple_width(curve, 2 * a);
  exactlin::check_cells(
      base.standard_cols.size() * (base.standard_cols.size() - 1) / 2, width);

  FpMatrix out(0, width);
  std::vector<std::uint64_t> row(width);
  const auto& basis = base.standard_cols;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      monomial_tuple_row(curve, a, a, monos[basis[i]], monos[basis[j]], row);
      out.push_row(row);
    }
  }
  return out;
}

FpMatrix wedge_rows_perturbed(const CICurve& curve, int a, Rng& rng) {
  const GradedRing& ring = curve.ring();
  const Prime p = curve.prime();
  const QuotientPiece& base = curve.piece(a);

  std::vector<Form> lifts;
  lifts.reserve(base.standard_cols.size());
  for (std::uint32_t sc : base.standard_cols)
    lifts.push_back(add(ring, p, gradedring::monomial_form(ring, a, sc),
                        random_ideal_element(curve, a, rng)));

  FpMatrix out(0, tuple_width(curve, 2 * a));
  for (std::size_t i = 0; i < lifts.size(); ++i)
    for (std::size_t j = i + 1; j < lifts.size(); ++j)
      out.push_row(gaussian_tuple(curve, lifts[i], lifts[j]));
  return out;
}

FpMatrix pair_rows(const CICurve& curve, int a, int b) {
  const GradedRing& ring = curve.ring();
  const Prime p = curve.prime();
  const QuotientPiece& pa = curve.piece(a);
  const QuotientPiece& pb = curve.piece(b);
  const QuotientPiece& pab = curve.piece(a + b);
  const auto& ma = ring.monomials(a);
  const auto& mb = ring.monomials(b);

  const std::size_t domain = pa.standard_cols.size() * pb.standard_cols.size();
  const std::size_t width = tuple_width(curve, a + b);

  // Multiplication map in standard coordinates, one column per basis pair.
  exactlin::check_cells(pab.quotient_dim, domain);
  FpMatrix mult(pab.quotient_dim, domain);
  std::vector<std::uint64_t> nf(pab.quotient_dim);
  // Tuples of the same pairs, one row per pair, reused for every kernel
  // vector below.
  exactlin::check_cells(domain, width);
  FpMatrix tuples(domain, width);

  std::size_t col = 0;
  for (std::uint32_t sa : pa.standard_cols) {
    for (std::uint32_t sb : pb.standard_cols) {
      Exponents e = ma[sa];
      for (int w = 0; w < ring.nvars(); ++w)
        e[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>(
            e[static_cast<std::size_t>(w)] + mb[sb][static_cast<std::size_t>(w)]);
      std::fill(nf.begin(), nf.end(), 0);
      pab.accumulate_nf(p, ring.index_of(a + b, e), 1, nf);
      for (std::size_t r = 0; r < nf.size(); ++r) mult.at(r, col) = nf[r];
      monomial_tuple_row(curve, a, b, ma[sa], mb[sb], tuples.row(col));
      ++col;
    }
  }

  Echelon ech(domain, p);
  for (std::size_t r = 0; r < mult.rows(); ++r)
    ech.add_row(std::vector<std::uint64_t>(mult.row(r).begin(), mult.row(r).end()));
  ech.to_rref();

  exactlin::check_cells(domain - ech.rank(), width);
  FpMatrix out(0, width);
  std::vector<std::uint64_t> row(width);
  ech.for_each_kernel_vector([&](const std::vector<std::uint64_t>& v) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!v[c]) continue;
      exactlin::kernels::axpy(row.data(), tuples.row(c).data(), width, v[c],
                              p.value);
    }
    out.push_row(row);
  });
  return out;
}

RankResult corank_once(const CICurve& curve, int a, int b) {
  if (a < 1 || b < 1) throw InvalidInputError("twist degrees must be >= 1");
  if (a > b) std::swap(a, b);
  const int m = a + b;
  if (curve.max_cached_degree() < curve.k() + m)
    throw ShapeError("curve caches stop at degree " +
                     std::to_string(curve.max_cached_degree()) +
                     ", need " + std::to_string(curve.k() + m));
  const FpMatrix rows =
      a == b ? wedge_rows(curve, a) : pair_rows(curve, a, b);
  const FpMatrix conormal = conormal_rows(curve, m);
  RankResult res;
  res.rank = exactlin::relative_rank(rows, conormal, curve.prime());
  res.target_dim = curve.h0(curve.k() + m);
  res.corank = res.target_dim - static_cast<std::int64_t>(res.rank);
  return res;
}

namespace {

CorankReport run_two_prime(const CIType& t, int a, int b,
                           const TwoPrimeConfig& cfg, const char* mode) {
  if (cfg.primes.size() > 2)
    throw InvalidInputError("at most two explicit primes");
  std::vector<Prime> explicit_primes;
  for (std::uint64_t pv : cfg.primes) explicit_primes.push_back(exactlin::checked_prime(pv));
  if (explicit_primes.size() == 2 &&
      explicit_primes[0].value == explicit_primes[1].value)
    throw InvalidInputError("explicit primes must be distinct");

  Rng prng(mix_seed({cfg.seed, 0x7072696d65ull}));
  std::vector<std::uint64_t> tried;
  std::vector<RankResult> results;

  const auto next_prime = [&]() -> Prime {
    if (tried.size() < explicit_primes.size())
      return explicit_primes[tried.size()];
    for (;;) {
      const Prime p = exactlin::random_prime(prng);
      if (std::find(tried.begin(), tried.end(), p.value) == tried.end())
        return p;
    }
  };

  const int lo = std::min(a, b), hi = std::max(a, b);
  const int cap = std::max(4 * t.k, t.k + lo + hi);
  const std::vector<int> reduce_at{lo + hi - 1, lo + hi};
  const std::size_t max_total = 2 + static_cast<std::size_t>(std::max(0, cfg.retries));

  while (tried.size() < max_total) {
    const Prime p = next_prime();
    const curves::CICurve curve = curves::make_ci_curve(t, p, cfg.seed, cap, reduce_at);
    const RankResult r = corank_once(curve, lo, hi);
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].rank == r.rank) {
        CorankReport rep;
        rep.type = t;
        rep.a = lo;
        rep.b = hi;
        rep.mode = mode;
        rep.rank = r.rank;
        rep.corank = r.corank;
        rep.target_dim = r.target_dim;
        rep.primes = {tried[i], p.value};
        rep.seed = cfg.seed;
        rep.retries = static_cast<int>(tried.size()) - 1;
        rep.path = "matrix";
        return rep;
      }
    }
    tried.push_back(p.value);
    results.push_back(r);
  }
  throw InstabilityError("ranks for type (" + t.label() + ") disagreed at " +
                         std::to_string(tried.size()) + " primes");
}

}  // namespace

CorankReport corank_wedge(const CIType& t, const TwoPrimeConfig& cfg) {
  return run_two_prime(t, t.k, t.k, cfg, "wedge");
}

CorankReport corank_pair(const CIType& t, int a, int b, const TwoPrimeConfig& cfg) {
  if (a == b) return run_two_prime(t, a, b, cfg, "wedge");
  return run_two_prime(t, a, b, cfg, "pair");
}

bool rows_satisfy_euler(const CICurve& curve, const FpMatrix& rows, int m) {
  const GradedRing& ring = curve.ring();
  const Prime p = curve.prime();
  const QuotientPiece& source = curve.piece(m - 1);
  const QuotientPiece& target = curve.piece(m);
  const auto& monos = ring.monomials(m - 1);
  const std::size_t q = source.quotient_dim;

  std::vector<std::uint64_t> acc(target.quotient_dim);
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    const auto row = rows.row(r);
    for (int v = 0; v < ring.nvars(); ++v) {
      const auto seg = row.subspan(static_cast<std::size_t>(v) * q, q);
      for (std::size_t j = 0; j < q; ++j) {
        if (!seg[j]) continue;
        Exponents e = monos[source.standard_cols[j]];
        const auto sv = static_cast<std::size_t>(v);
        e[sv] = static_cast<std::uint8_t>(e[sv] + 1);
        target.accumulate_nf(p, ring.index_of(m, e), seg[j], acc);
      }
    }
    for (std::uint64_t c : acc)
      if (c) return false;
  }
  return true;
}

std::int64_t corank_formula(const CIType& t) {
  if (t.k < 2)
    throw FormulaInapplicableError("closed form needs canonical twist >= 2");
  for (int d : t.degrees)
    if (d == 2 * t.k)
      throw FormulaInapplicableError(
          "closed form invalid for type (" + t.label() + "): a generator degree equals 2k; use the matrix path");
  std::int64_t total = 0;
  for (int d : t.degrees)
    total += gradedring::hilbert_ci(t.ambient, t.degrees, d - t.k);
  return total;
}

}  // namespace wahl::gaussmap
