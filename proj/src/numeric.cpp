#include "assur/numeric.hpp"

#include <sstream>

namespace assur {

double rat_to_double(const Rat& q) {
  return boost::multiprecision::numerator(q).convert_to<double>() /
         boost::multiprecision::denominator(q).convert_to<double>();
}

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t n) {
  // modulo bias is irrelevant here; determinism is what matters
  return n == 0 ? 0 : next() % n;
}

int64_t SplitMix64::coordinate() {
  const uint64_t span = (1ULL << 32) + 1;  // |[-2^31, 2^31]|
  return static_cast<int64_t>(below(span)) - (1LL << 31);
}

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  SplitMix64 g(seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x517cc1b727220a95ULL));
  return g.next();
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit integers
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t random_prime62(uint64_t seed, uint64_t draw) {
  SplitMix64 g(mix_seed(seed, 0x7071ULL + draw));
  for (;;) {
    uint64_t c = (g.next() | (1ULL << 61) | 1ULL) & ((1ULL << 62) - 1);
    while (!is_prime_u64(c)) c += 2;
    if (c < (1ULL << 62)) return c;
  }
}

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const { return powmod(a, e, p_); }

uint64_t PrimeField::from_int(int64_t v) const {
  if (v >= 0) return static_cast<uint64_t>(v) % p_;
  uint64_t m = static_cast<uint64_t>(-(v + 1)) + 1;  // |v| without UB at INT64_MIN
  uint64_t r = m % p_;
  return r == 0 ? 0 : p_ - r;
}

uint64_t PrimeField::from_rat(const Rat& q) const {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt pb(p_);
  BigInt nr = num % pb;
  if (nr < 0) nr += pb;
  BigInt dr = den % pb;
  uint64_t n = nr.convert_to<uint64_t>();
  uint64_t d = dr.convert_to<uint64_t>();
  return mul(n, inv(d));
}

}  // namespace assur
