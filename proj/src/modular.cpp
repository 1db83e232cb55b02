#include "modular.hpp"

#include <utility>

namespace hilbertia::modular {

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t PrimeField::reduce(const Integer& z) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
  return r.get_ui();
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  // a^(p-2)
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
    e >>= 1U;
  }
  return result;
}

FpPoly PrimeField::from_integers(const ZPoly& f) const {
  FpPoly r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(reduce(c));
  trim(r);
  return r;
}

FpPoly PrimeField::add(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p_;
  trim(r);
  return r;
}

FpPoly PrimeField::sub(const FpPoly& a, const FpPoly& b) const {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p_ - b[i]) % p_;
  trim(r);
  return r;
}

FpPoly PrimeField::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
  }
  trim(r);
  return r;
}

void PrimeField::divmod(const FpPoly& a, const FpPoly& b, FpPoly* q, FpPoly* r) const {
  FpPoly rem = a;
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv_lead = inv(b.back());
  FpPoly quo(rem.size() >= b.size() ? rem.size() - db : 0, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    std::uint64_t t = rem[k] * inv_lead % p_;
    quo[k - db] = t;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = (rem[k - db + i] + p_ - t * b[i] % p_) % p_;
  }
  if (rem.size() > db) rem.resize(db);
  trim(rem);
  trim(quo);
  if (q != nullptr) *q = std::move(quo);
  if (r != nullptr) *r = std::move(rem);
}

FpPoly PrimeField::rem(const FpPoly& a, const FpPoly& b) const {
  FpPoly r;
  divmod(a, b, nullptr, &r);
  return r;
}

FpPoly PrimeField::monic(const FpPoly& a) const {
  if (a.empty()) return a;
  FpPoly r = a;
  const std::uint64_t il = inv(a.back());
  for (auto& c : r) c = c * il % p_;
  return r;
}

FpPoly PrimeField::gcd(FpPoly a, FpPoly b) const {
  while (!b.empty()) {
    FpPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

FpPoly PrimeField::derivative(const FpPoly& a) const {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p_) % p_;
  trim(r);
  return r;
}

FpPoly PrimeField::powmod(FpPoly base, const Integer& exp, const FpPoly& mod) const {
  FpPoly result{1};
  base = rem(base, mod);
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), mod);
    if (mpz_tstbit(exp.get_mpz_t(), i) != 0) result = rem(mul(result, base), mod);
  }
  return result;
}

void PrimeField::bezout(const FpPoly& a, const FpPoly& b, FpPoly* s, FpPoly* t) const {
  FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    FpPoly q, r;
    divmod(r0, r1, &q, &r);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly sn = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(sn);
    FpPoly tn = sub(t0, mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(tn);
  }
  // r0 is a nonzero constant for coprime inputs.
  const std::uint64_t il = inv(r0.back());
  for (auto& c : s0) c = c * il % p_;
  for (auto& c : t0) c = c * il % p_;
  *s = std::move(s0);
  *t = std::move(t0);
}

void PrimeField::equal_degree_split(const FpPoly& f, int d, std::mt19937_64& rng,
                                    std::vector<FpPoly>* out) const {
  const int n = degree(f);
  if (n == d) {
    out->push_back(f);
    return;
  }
  Integer e = ipow(Integer(static_cast<unsigned long>(p_)), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p_ - 1);
  for (;;) {
    FpPoly a(n);
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) < 1) continue;
    FpPoly g = gcd(a, f);
    if (degree(g) <= 0 || degree(g) == n) {
      FpPoly b = powmod(a, e, f);
      b = sub(b, FpPoly{1});
      g = gcd(b, f);
    }
    if (degree(g) > 0 && degree(g) < n) {
      FpPoly q;
      divmod(f, g, &q, nullptr);
      equal_degree_split(g, d, rng, out);
      equal_degree_split(monic(q), d, rng, out);
      return;
    }
  }
}

std::vector<FpPoly> PrimeField::factor_squarefree(const FpPoly& f, std::mt19937_64& rng) const {
  std::vector<FpPoly> out;
  FpPoly remaining = monic(f);
  if (degree(remaining) <= 1) {
    if (degree(remaining) == 1) out.push_back(remaining);
    return out;
  }
  const FpPoly x{0, 1};
  FpPoly h = rem(x, remaining);
  const Integer p(static_cast<unsigned long>(p_));
  for (int d = 1; degree(remaining) >= 2 * d; ++d) {
    h = powmod(h, p, remaining);
    FpPoly g = gcd(sub(h, x), remaining);
    if (degree(g) > 0) {
      equal_degree_split(g, d, rng, &out);
      FpPoly q;
      divmod(remaining, g, &q, nullptr);
      remaining = monic(q);
      h = rem(h, remaining);
    }
  }
  if (degree(remaining) > 0) out.push_back(remaining);
  return out;
}

ZPoly ResidueRing::reduce(const ZPoly& a) const {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m_.get_mpz_t());
  trim(r);
  return r;
}

ZPoly ResidueRing::add(const ZPoly& a, const ZPoly& b) const {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(r);
}

ZPoly ResidueRing::sub(const ZPoly& a, const ZPoly& b) const {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(r);
}

ZPoly ResidueRing::mul(const ZPoly& a, const ZPoly& b) const {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(r);
}

ZPoly ResidueRing::scale(const ZPoly& a, const Integer& c) const {
  ZPoly r = a;
  for (auto& x : r) x *= c;
  return reduce(r);
}

void ResidueRing::divmod_monic(const ZPoly& a, const ZPoly& b, ZPoly* q, ZPoly* r) const {
  ZPoly rem = reduce(a);
  const std::size_t db = b.size() - 1;
  ZPoly quo(rem.size() >= b.size() ? rem.size() - db : 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Integer t = rem[k];
    quo[k - db] = t;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k - db + i] -= t * b[i];
      mpz_fdiv_r(rem[k - db + i].get_mpz_t(), rem[k - db + i].get_mpz_t(), m_.get_mpz_t());
    }
  }
  if (rem.size() > db) rem.resize(db);
  trim(rem);
  trim(quo);
  if (q != nullptr) *q = std::move(quo);
  if (r != nullptr) *r = std::move(rem);
}

ZPoly ResidueRing::symmetric(const ZPoly& a) const {
  ZPoly r = reduce(a);
  const Integer half = m_ / 2;
  for (auto& c : r) {
    if (c > half) c -= m_;
  }
  return r;
}

namespace {

ZPoly to_z(const FpPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

FpPoly product(const PrimeField& fp, const std::vector<FpPoly>& fs, std::size_t begin, std::size_t end) {
  FpPoly r{1};
  for (std::size_t i = begin; i < end; ++i) r = fp.mul(r, fs[i]);
  return r;
}

}  // namespace

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p,
                               unsigned levels) {
  const Integer pz(static_cast<unsigned long>(p));
  const Integer target = ipow(pz, 1UL << levels);
  if (factors.size() == 1) {
    Integer inv_lc;
    mpz_invert(inv_lc.get_mpz_t(), f.back().get_mpz_t(), target.get_mpz_t());
    return {ResidueRing(target).scale(f, inv_lc)};
  }
  const PrimeField fp(p);
  const std::size_t half = factors.size() / 2;
  FpPoly g0 = product(fp, factors, 0, half);
  const FpPoly h0 = product(fp, factors, half, factors.size());
  for (auto& c : g0) c = c * fp.reduce(f.back()) % p;
  FpPoly s0, t0;
  fp.bezout(g0, h0, &s0, &t0);

  ZPoly g = to_z(g0), h = to_z(h0), s = to_z(s0), t = to_z(t0);
  Integer m = pz;
  for (unsigned level = 0; level < levels; ++level) {
    m *= m;
    const ResidueRing ring(m);
    ZPoly e = ring.sub(f, ring.mul(g, h));
    ZPoly q, r;
    ring.divmod_monic(ring.mul(s, e), h, &q, &r);
    ZPoly g1 = ring.add(g, ring.add(ring.mul(t, e), ring.mul(q, g)));
    ZPoly h1 = ring.add(h, r);
    ZPoly b = ring.sub(ring.add(ring.mul(s, g1), ring.mul(t, h1)), ZPoly{Integer(1)});
    ZPoly c, d;
    ring.divmod_monic(ring.mul(s, b), h1, &c, &d);
    s = ring.sub(s, d);
    t = ring.sub(t, ring.add(ring.mul(t, b), ring.mul(c, g1)));
    g = std::move(g1);
    h = std::move(h1);
  }
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  std::vector<ZPoly> out = hensel_lift(g, left, p, levels);
  std::vector<ZPoly> more = hensel_lift(h, right, p, levels);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

}  // namespace hilbertia::modular
