#ifndef ASSUR_NUMERIC_HPP
#define ASSUR_NUMERIC_HPP

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace assur {

// Exact scalar used wherever a decision must not depend on rounding.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

double rat_to_double(const Rat& q);
std::string rat_to_string(const Rat& q);

// Deterministic 64-bit mixer; the project never relies on
// implementation-defined std distributions.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next();
  // uniform in [0, n)
  uint64_t below(uint64_t n);
  // uniform integer in [-2^31, 2^31]
  int64_t coordinate();
};

uint64_t mix_seed(uint64_t seed, uint64_t salt);

bool is_prime_u64(uint64_t n);
// deterministic pseudo-random 62-bit prime for the given draw index
uint64_t random_prime62(uint64_t seed, uint64_t draw);

// Arithmetic mod a word-size prime.
class PrimeField {
 public:
  using value_type = uint64_t;

  explicit PrimeField(uint64_t p) : p_(p) {}

  uint64_t p() const { return p_; }
  uint64_t zero() const { return 0; }
  uint64_t one() const { return 1; }
  bool is_zero(uint64_t a) const { return a == 0; }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const { return pow(a, p_ - 2); }
  uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }

  uint64_t from_int(int64_t v) const;
  uint64_t from_rat(const Rat& q) const;

 private:
  uint64_t p_;
};

// Field facade over Rat so the elimination kernels can be shared.
struct RationalField {
  using value_type = Rat;
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  bool is_zero(const Rat& a) const { return a == 0; }
  Rat add(const Rat& a, const Rat& b) const { return a + b; }
  Rat sub(const Rat& a, const Rat& b) const { return a - b; }
  Rat neg(const Rat& a) const { return -a; }
  Rat mul(const Rat& a, const Rat& b) const { return a * b; }
  Rat div(const Rat& a, const Rat& b) const { return a / b; }
  Rat from_int(int64_t v) const { return Rat(v); }
  Rat from_rat(const Rat& q) const { return q; }
};

}  // namespace assur

#endif
