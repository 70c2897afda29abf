#include "gds/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gds {

namespace {

using SymVec = std::map<std::size_t, Rational>;  // sparse over symbol indices

SymVec to_symvec(const SparseRow& row) {
  SymVec v;
  for (const auto& [k, r] : row)
    if (r != 0) v[k] = r;
  return v;
}

void axpy(SymVec& v, const Rational& t, const SymVec& w) {
  for (const auto& [k, x] : w) {
    Rational& slot = v[k];
    slot += t * x;
    if (slot == 0) v.erase(k);
  }
}

}  // namespace

BohrDecomposition extract_basis(const Frequency& freq, std::size_t M) {
  if (M > freq.size()) throw std::invalid_argument("M exceeds frequency length");
  struct Pivot {
    std::size_t col;
    SymVec row;                          // residual in symbol space
    std::map<std::size_t, Rational> combo;  // residual over basis indices
  };
  std::vector<Pivot> pivots;
  BohrDecomposition dec;
  std::vector<std::map<std::size_t, Rational>> sparse_rows;

  for (std::size_t n = 0; n < M; ++n) {
    SymVec v = to_symvec(freq.row(n));
    std::map<std::size_t, Rational> combo;
    for (const auto& p : pivots) {
      auto it = v.find(p.col);
      if (it == v.end()) continue;
      Rational t = it->second / p.row.at(p.col);
      axpy(v, -t, p.row);
      for (const auto& [b, c] : p.combo) {
        Rational& slot = combo[b];
        slot += t * c;
        if (slot == 0) combo.erase(b);
      }
    }
    if (v.empty()) {
      sparse_rows.push_back(std::move(combo));
    } else {
      // lambda_n is independent of everything chosen so far: new basis element
      std::size_t basis_pos = dec.basis_indices.size();
      dec.basis_indices.push_back(n);
      Pivot p;
      p.col = v.begin()->first;
      p.row = std::move(v);
      p.combo[basis_pos] = 1;
      for (const auto& [b, c] : combo) p.combo[b] = -c;
      pivots.push_back(std::move(p));
      sparse_rows.push_back({{basis_pos, Rational(1)}});
    }
  }
  const std::size_t B = dec.basis_indices.size();
  dec.rows.assign(M, std::vector<Rational>(B, Rational(0)));
  for (std::size_t n = 0; n < M; ++n)
    for (const auto& [b, c] : sparse_rows[n]) dec.rows[n][b] = c;
  return dec;
}

std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> a) {
  if (a.empty()) return {};
  const std::size_t K = a.front().size();
  std::vector<std::vector<Int>> piv;  // echelon rows, keyed by leading column

  auto leading = [&](const std::vector<Int>& v) {
    for (std::size_t c = 0; c < K; ++c)
      if (v[c] != 0) return c;
    return K;
  };

  for (auto v : a) {
    for (;;) {
      std::size_t c = leading(v);
      if (c == K) break;
      auto it = std::find_if(piv.begin(), piv.end(), [&](const auto& h) {
        return leading(h) == c;
      });
      if (it == piv.end()) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        piv.push_back(std::move(v));
        break;
      }
      auto& h = *it;
      Int x = h[c], y = v[c], p, q;
      Int g = boost::multiprecision::gcd(x, y);
      // extended gcd
      {
        Int s0 = 1, s1 = 0, t0 = 0, t1 = 1, r0 = x, r1 = y;
        while (r1 != 0) {
          Int qq = r0 / r1;
          Int r2 = r0 - qq * r1;
          Int s2 = s0 - qq * s1;
          Int t2 = t0 - qq * t1;
          r0 = r1; r1 = r2; s0 = s1; s1 = s2; t0 = t1; t1 = t2;
        }
        if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
        g = r0; p = s0; q = t0;
      }
      std::vector<Int> hv(K), vv(K);
      for (std::size_t j = 0; j < K; ++j) {
        hv[j] = p * h[j] + q * v[j];
        vv[j] = (x / g) * v[j] - (y / g) * h[j];
      }
      h = std::move(hv);
      v = std::move(vv);
    }
  }
  std::sort(piv.begin(), piv.end(), [&](const auto& u, const auto& w) {
    return leading(u) < leading(w);
  });
  // reduce entries above each pivot into [0, pivot)
  for (std::size_t j = piv.size(); j-- > 0;) {
    std::size_t c = leading(piv[j]);
    for (std::size_t i = 0; i < j; ++i) {
      Int q = piv[i][c] / piv[j][c];
      if (piv[i][c] - q * piv[j][c] < 0) q -= 1;  // floor division
      if (q == 0) continue;
      for (std::size_t k = 0; k < K; ++k) piv[i][k] -= q * piv[j][k];
    }
  }
  return piv;
}

std::vector<Int> hnf_solve(const std::vector<std::vector<Int>>& h,
                           std::vector<Int> v) {
  const std::size_t K = v.size();
  auto leading = [&](const std::vector<Int>& w) {
    for (std::size_t c = 0; c < K; ++c)
      if (w[c] != 0) return c;
    return K;
  };
  std::vector<Int> coeff(h.size(), Int(0));
  for (std::size_t j = 0; j < h.size(); ++j) {
    std::size_t c = leading(h[j]);
    if (v[c] == 0) continue;
    if (v[c] % h[j][c] != 0)
      throw std::invalid_argument("vector not in lattice");
    Int q = v[c] / h[j][c];
    coeff[j] = q;
    for (std::size_t k = 0; k < K; ++k) v[k] -= q * h[j][k];
  }
  for (const auto& x : v)
    if (x != 0) throw std::invalid_argument("vector not in lattice");
  return coeff;
}

Real FrequencyLattice::generator_exact(std::size_t j) const {
  Real acc = 0;
  for (std::size_t k = 0; k < generators[j].size(); ++k) {
    const Rational& r = generators[j][k];
    if (r == 0) continue;
    Real num(numerator(r).str()), den(denominator(r).str());
    acc += freq->exact_value(dec.basis_indices[k]) * num / den;
  }
  return acc;
}

double FrequencyLattice::generator_value(std::size_t j) const {
  return to_double(generator_exact(j));
}

FrequencyLattice lattice_basis(const FrequencyPtr& freq, std::size_t M) {
  if (!freq) throw std::invalid_argument("null frequency");
  if (M < 1) throw std::invalid_argument("M >= 1 required");
  FrequencyLattice lat;
  lat.freq = freq;
  lat.prefix = M;
  lat.dec = extract_basis(*freq, M);
  const std::size_t B = lat.dec.basis_indices.size();

  // clear denominators per basis column
  std::vector<Int> colscale(B, Int(1));
  for (std::size_t k = 0; k < B; ++k)
    for (std::size_t n = 0; n < M; ++n) {
      Int d = denominator(lat.dec.rows[n][k]);
      colscale[k] = boost::multiprecision::lcm(colscale[k], d);
    }
  std::vector<std::vector<Int>> a(M, std::vector<Int>(B));
  for (std::size_t n = 0; n < M; ++n)
    for (std::size_t k = 0; k < B; ++k) {
      Rational scaled = lat.dec.rows[n][k] * colscale[k];
      a[n][k] = numerator(scaled);  // exact by choice of colscale
    }
  auto h = hnf_rows(a);
  for (const auto& hrow : h) {
    std::vector<Rational> gen(B);
    for (std::size_t k = 0; k < B; ++k) gen[k] = Rational(hrow[k], colscale[k]);
    lat.generators.push_back(std::move(gen));
  }
  lat.coords.reserve(M);
  for (std::size_t n = 0; n < M; ++n) lat.coords.push_back(hnf_solve(h, a[n]));
  return lat;
}

TypeReport classify_prefix_type(const BohrDecomposition& dec) {
  TypeReport rep;
  bool all_int = true, all_nat = true;
  for (const auto& row : dec.rows)
    for (const auto& r : row) {
      if (denominator(r) != 1) all_int = all_nat = false;
      else if (r < 0) all_nat = false;
    }
  if (all_nat) {
    rep.type = PrefixType::natural;
    return rep;
  }
  if (all_int) {
    rep.type = PrefixType::integer;
    return rep;
  }
  // rescale: HNF of the row lattice always yields integral coordinates for a
  // finite prefix, so report integer over the witness basis
  const std::size_t B = dec.rows.empty() ? 0 : dec.rows.front().size();
  std::vector<Int> colscale(B, Int(1));
  for (std::size_t k = 0; k < B; ++k)
    for (const auto& row : dec.rows)
      colscale[k] = boost::multiprecision::lcm(colscale[k], denominator(row[k]));
  std::vector<std::vector<Int>> a;
  for (const auto& row : dec.rows) {
    std::vector<Int> v(B);
    for (std::size_t k = 0; k < B; ++k)
      v[k] = numerator(Rational(row[k] * colscale[k]));
    a.push_back(std::move(v));
  }
  auto h = hnf_rows(a);
  rep.type = PrefixType::integer;
  rep.rescaled = true;
  for (const auto& hrow : h) {
    std::vector<Rational> gen(B);
    for (std::size_t k = 0; k < B; ++k) gen[k] = Rational(hrow[k], colscale[k]);
    rep.witness_basis.push_back(std::move(gen));
  }
  return rep;
}

bool equal_frequency_sum(const FrequencyLattice& lat,
                         const std::vector<std::size_t>& A,
                         const std::vector<std::size_t>& B) {
  std::vector<Int> sum(lat.rank(), Int(0));
  auto add = [&](const std::vector<std::size_t>& idx, int sign) {
    for (std::size_t n1 : idx) {
      if (n1 < 1 || n1 > lat.prefix)
        throw std::out_of_range("index outside lattice prefix");
      const auto& c = lat.coords[n1 - 1];
      for (std::size_t j = 0; j < c.size(); ++j) sum[j] += sign * c[j];
    }
  };
  add(A, +1);
  add(B, -1);
  return std::all_of(sum.begin(), sum.end(),
                     [](const Int& x) { return x == 0; });
}

}  // namespace gds
