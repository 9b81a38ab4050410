#pragma once

// Exact scalars: GF(p), GF(p^k) and QQ, polynomials over them, and
// base-p digit combinatorics.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace plethysm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a %= m;
  if (a < 0) a += m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t s : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % s == 0) return n == s;
  }
  std::int64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = powmod(a, static_cast<std::uint64_t>(d), n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over GF(p), low degree first, no trailing zeros.
using ZpPoly = std::vector<std::int64_t>;

inline void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZpPoly zp_sub(ZpPoly a, const ZpPoly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(c);
  return c;
}

// Remainder modulo an arbitrary nonzero divisor.
inline ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, std::int64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::int64_t lead_inv = powmod(m.back(), static_cast<std::uint64_t>(p - 2), p);
  while (!a.empty() && a.size() - 1 >= dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::int64_t c = mulmod(a.back(), lead_inv, p);
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - mulmod(c, m[i], p)) % p + p) % p;
    trim(a);
  }
  return a;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline ZpPoly zp_powmod(ZpPoly base, std::int64_t e, const ZpPoly& m, std::int64_t p) {
  ZpPoly r{1};
  base = zp_mod(base, m, p);
  while (e) {
    if (e & 1) r = zp_mod(zp_mul(r, base, p), m, p);
    base = zp_mod(zp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

// Rabin's test for a monic polynomial of degree k >= 1.
inline bool zp_irreducible(const ZpPoly& f, std::int64_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  const ZpPoly x{0, 1};
  std::vector<ZpPoly> frob(k + 1);  // frob[j] = x^(p^j) mod f
  frob[0] = zp_mod(x, f, p);
  for (int j = 1; j <= k; ++j) frob[j] = zp_powmod(frob[j - 1], p, f, p);
  if (zp_sub(frob[k], frob[0], p) != ZpPoly{}) return false;
  for (std::int64_t r : prime_factors(k)) {
    ZpPoly g = zp_gcd(f, zp_sub(frob[k / r], frob[0], p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

struct FieldData {
  std::int64_t p = 0;  // 0 for QQ
  int k = 1;
  ZpPoly modulus;      // monic, size k+1 when k > 1
  std::int64_t q = 0;  // p^k, 0 for QQ
  std::vector<std::int64_t> pw;
  bool tables = false;
  std::vector<std::int64_t> exp_tab, log_tab;
  std::string spec;

  ZpPoly decode(std::int64_t c) const {
    ZpPoly d(k, 0);
    for (int i = 0; i < k; ++i) {
      d[i] = c % p;
      c /= p;
    }
    trim(d);
    return d;
  }
  std::int64_t encode(const ZpPoly& d) const {
    std::int64_t c = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) c = c * p + d[i];
    return c;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    if (k == 1) {
      std::int64_t s = a + b;
      return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    std::int64_t c = 0;
    for (int i = k - 1; i >= 0; --i) c = c * p + ((a / pw[i]) % p + (b / pw[i]) % p) % p;
    return c;
  }
  std::int64_t neg(std::int64_t a) const {
    if (k == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    std::int64_t c = 0;
    for (int i = k - 1; i >= 0; --i) c = c * p + (p - (a / pw[i]) % p) % p;
    return c;
  }
  std::int64_t mul_slow(std::int64_t a, std::int64_t b) const {
    return encode(zp_mod(zp_mul(decode(a), decode(b), p), modulus, p));
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const {
    if (k == 1) return mulmod(a, b, p);
    if (a == 0 || b == 0) return 0;
    if (tables) return exp_tab[(log_tab[a] + log_tab[b]) % (q - 1)];
    return mul_slow(a, b);
  }
  std::int64_t pow(std::int64_t a, std::uint64_t e) const {
    std::int64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::int64_t inv(std::int64_t a) const {
    if (k == 1) return powmod(a, static_cast<std::uint64_t>(p - 2), p);
    if (tables) return exp_tab[(q - 1 - log_tab[a]) % (q - 1)];
    return pow(a, static_cast<std::uint64_t>(q - 2));
  }

  void build_tables() {
    if (k == 1 || q > (1 << 20)) return;
    const auto factors = prime_factors(q - 1);
    std::int64_t gen = -1;
    for (std::int64_t g = 2; g < q && gen < 0; ++g) {
      bool ok = true;
      for (std::int64_t r : factors) {
        std::int64_t x = 1, b = g;
        std::uint64_t e = static_cast<std::uint64_t>((q - 1) / r);
        while (e) {
          if (e & 1) x = mul_slow(x, b);
          b = mul_slow(b, b);
          e >>= 1;
        }
        if (x == 1) {
          ok = false;
          break;
        }
      }
      if (ok) gen = g;
    }
    exp_tab.assign(q - 1, 0);
    log_tab.assign(q, 0);
    std::int64_t x = 1;
    for (std::int64_t i = 0; i < q - 1; ++i) {
      exp_tab[i] = x;
      log_tab[x] = i;
      x = mul_slow(x, gen);
    }
    tables = true;
  }
};

inline std::string modulus_string(const ZpPoly& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) os << (i ? "," : "") << m[i];
  return os.str();
}

// Lexicographically least monic irreducible of degree k: compare
// c_{k-1}, ..., c_0 in that order (equivalently the integer sum c_i p^i).
inline ZpPoly default_modulus(std::int64_t p, int k) {
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::int64_t code = 0; code < count; ++code) {
    ZpPoly f(k + 1, 0);
    std::int64_t c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    if (zp_irreducible(f, p)) return f;
  }
  fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

inline const FieldData* intern_field(std::int64_t p, int k, const ZpPoly& modulus) {
  static std::mutex mu;
  static std::map<std::tuple<std::int64_t, int, ZpPoly>, std::unique_ptr<FieldData>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, k, modulus);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto fd = std::make_unique<FieldData>();
  fd->p = p;
  fd->k = k;
  fd->modulus = modulus;
  if (p == 0) {
    fd->q = 0;
    fd->spec = "QQ";
  } else {
    fd->q = 1;
    fd->pw.push_back(1);
    for (int i = 0; i < k; ++i) {
      fd->q *= p;
      fd->pw.push_back(fd->q);
    }
    if (k == 1) {
      fd->spec = "GF(" + std::to_string(p) + ")";
    } else {
      fd->spec = "GF(" + std::to_string(p) + "^" + std::to_string(k) + "; " + modulus_string(modulus) + ")";
      fd->build_tables();
    }
  }
  const FieldData* raw = fd.get();
  registry.emplace(key, std::move(fd));
  return raw;
}

}  // namespace detail

class Elem;

// Handle to an interned field descriptor. Equal descriptors share storage,
// so equality is pointer equality.
class Field {
 public:
  Field() = default;
  explicit Field(const detail::FieldData* d) : d_(d) {}

  static Field rationals() { return Field(detail::intern_field(0, 1, {})); }

  static Field make(std::int64_t characteristic, int degree = 1,
                    std::optional<std::vector<std::int64_t>> modulus = std::nullopt) {
    if (characteristic == 0) {
      if (degree != 1) fail(ErrorKind::ModulusDegreeMismatch, "QQ has degree 1");
      return rationals();
    }
    if (!detail::is_prime(characteristic)) {
      fail(ErrorKind::NonPrimeCharacteristic, std::to_string(characteristic) + " is not prime");
    }
    if (degree < 1) fail(ErrorKind::ModulusDegreeMismatch, "degree must be positive");
    const std::int64_t p = characteristic;
    {
      __int128 q = 1;
      for (int i = 0; i < degree; ++i) {
        q *= p;
        if (q > (static_cast<__int128>(1) << 62)) fail(ErrorKind::ParamsOutOfSupportedRange, "field order too large");
      }
    }
    if (degree == 1) {
      if (modulus && modulus->size() != 2 && !modulus->empty()) {
        fail(ErrorKind::ModulusDegreeMismatch, "modulus degree differs from extension degree");
      }
      return Field(detail::intern_field(p, 1, {}));
    }
    detail::ZpPoly m;
    if (modulus) {
      m = *modulus;
      for (auto& c : m) c = ((c % p) + p) % p;
      if (static_cast<int>(m.size()) != degree + 1 || m.back() != 1) {
        fail(ErrorKind::ModulusDegreeMismatch, "modulus must be monic of degree " + std::to_string(degree));
      }
      if (!detail::zp_irreducible(m, p)) fail(ErrorKind::ReducibleModulus, "modulus is reducible over GF(p)");
    } else {
      m = detail::default_modulus(p, degree);
    }
    return Field(detail::intern_field(p, degree, m));
  }

  // "QQ", "GF(p)", "GF(p^k)", "GF(p^k; c0,...,c_{k-1})"; also "GF(q)" for q a prime power.
  static Field parse(const std::string& text);

  const detail::FieldData* data() const { return d_; }
  bool valid() const { return d_ != nullptr; }
  std::int64_t characteristic() const { return d_->p; }
  int degree() const { return d_->k; }
  std::int64_t order() const { return d_->q; }
  bool is_finite() const { return d_->p != 0; }
  bool is_prime_field() const { return d_->p == 0 || d_->k == 1; }
  std::vector<std::int64_t> modulus() const { return d_->modulus; }
  const std::string& spec() const { return d_->spec; }

  Elem zero() const;
  Elem one() const;
  Elem from_int(std::int64_t n) const;
  Elem from_integer(const Integer& n) const;
  Elem from_rational(const Rational& r) const;
  Elem from_code(std::int64_t code) const;
  Elem generator() const;  // the class of x in GF(p)[x]/(modulus); 1-dimensional fields give 1
  Elem binomial(std::int64_t n, std::int64_t k) const;
  std::vector<Elem> elements() const;
  Elem parse_element(const std::string& text) const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.d_ != b.d_; }

 private:
  const detail::FieldData* d_ = nullptr;
};

// Field element tagged with its field. QQ values live behind an immutable
// shared pointer (null means zero); finite-field values are integer codes.
class Elem {
 public:
  Elem() = default;
  Elem(const detail::FieldData* f, std::int64_t code) : f_(f), v_(code) {}
  Elem(const detail::FieldData* f, Rational r) : f_(f) {
    if (r != 0) q_ = std::make_shared<const Rational>(std::move(r));
  }

  Field field() const { return Field(f_); }
  const detail::FieldData* data() const { return f_; }
  std::int64_t code() const { return v_; }
  Rational rational() const {
    if (f_->p != 0) return Rational(v_);
    return q_ ? *q_ : Rational(0);
  }

  bool is_zero() const { return f_->p == 0 ? !q_ : v_ == 0; }
  bool is_one() const { return f_->p == 0 ? (q_ && *q_ == 1) : v_ == 1; }

  friend Elem operator+(const Elem& a, const Elem& b) {
    check(a, b);
    if (a.f_->p == 0) {
      if (!a.q_) return b;
      if (!b.q_) return a;
      return Elem(a.f_, *a.q_ + *b.q_);
    }
    return Elem(a.f_, a.f_->add(a.v_, b.v_));
  }
  friend Elem operator-(const Elem& a) {
    if (a.f_->p == 0) return a.q_ ? Elem(a.f_, -*a.q_) : a;
    return Elem(a.f_, a.f_->neg(a.v_));
  }
  friend Elem operator-(const Elem& a, const Elem& b) { return a + (-b); }
  friend Elem operator*(const Elem& a, const Elem& b) {
    check(a, b);
    if (a.f_->p == 0) {
      if (!a.q_ || !b.q_) return Elem(a.f_, Rational(0));
      return Elem(a.f_, *a.q_ * *b.q_);
    }
    return Elem(a.f_, a.f_->mul(a.v_, b.v_));
  }
  Elem inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (f_->p == 0) return Elem(f_, Rational(1) / *q_);
    return Elem(f_, f_->inv(v_));
  }
  friend Elem operator/(const Elem& a, const Elem& b) {
    check(a, b);
    return a * b.inverse();
  }
  Elem& operator+=(const Elem& b) { return *this = *this + b; }
  Elem& operator-=(const Elem& b) { return *this = *this - b; }
  Elem& operator*=(const Elem& b) { return *this = *this * b; }

  Elem pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    if (f_->p != 0) return Elem(f_, f_->pow(v_, static_cast<std::uint64_t>(e)));
    Elem r = field().one(), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Elem& a, const Elem& b) {
    if (a.f_ != b.f_) return false;
    if (a.f_->p == 0) {
      if (!a.q_ || !b.q_) return !a.q_ && !b.q_;
      return *a.q_ == *b.q_;
    }
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  // Canonical text: integer (prime field), "[c0,c1,...]" (extension), "n" or "n/d" (QQ).
  std::string to_string() const {
    if (f_->p == 0) {
      Rational r = rational();
      std::ostringstream os;
      os << numerator(r);
      if (denominator(r) != 1) os << "/" << denominator(r);
      return os.str();
    }
    if (f_->k == 1) return std::to_string(v_);
    auto d = f_->decode(v_);
    d.resize(f_->k, 0);
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < f_->k; ++i) os << (i ? "," : "") << d[i];
    os << "]";
    return os.str();
  }

  // Display form: prime fields use the representative of least absolute value.
  std::string signed_string() const {
    if (f_->p != 0 && f_->k == 1 && v_ > f_->p / 2) return std::to_string(v_ - f_->p);
    return to_string();
  }
  // True when the display form starts with a minus sign.
  bool displays_negative() const {
    if (f_->p == 0) return q_ && *q_ < 0;
    return f_->k == 1 && v_ > f_->p / 2;
  }

 private:
  static void check(const Elem& a, const Elem& b) {
    if (a.f_ != b.f_) fail(ErrorKind::FieldMismatch, "operands belong to different fields");
  }
  const detail::FieldData* f_ = nullptr;
  std::int64_t v_ = 0;
  std::shared_ptr<const Rational> q_;
};

inline Elem Field::zero() const {
  if (d_->p == 0) return Elem(d_, Rational(0));
  return Elem(d_, 0);
}
inline Elem Field::one() const {
  if (d_->p == 0) return Elem(d_, Rational(1));
  return Elem(d_, 1);
}
inline Elem Field::from_int(std::int64_t n) const {
  if (d_->p == 0) return Elem(d_, Rational(n));
  std::int64_t r = n % d_->p;
  if (r < 0) r += d_->p;
  return Elem(d_, r);
}
inline Elem Field::from_integer(const Integer& n) const {
  if (d_->p == 0) return Elem(d_, Rational(n));
  Integer r = n % d_->p;
  if (r < 0) r += d_->p;
  return Elem(d_, static_cast<std::int64_t>(r));
}
inline Elem Field::from_rational(const Rational& r) const {
  if (d_->p == 0) return Elem(d_, r);
  return from_integer(numerator(r)) / from_integer(denominator(r));
}
inline Elem Field::from_code(std::int64_t code) const {
  if (d_->p == 0 || code < 0 || code >= d_->q) fail(ErrorKind::InvalidArgument, "element code out of range");
  return Elem(d_, code);
}
inline Elem Field::generator() const {
  if (d_->p == 0 || d_->k == 1) return one();
  return Elem(d_, d_->p);
}

inline Integer binomial_exact(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Lucas's theorem: binomial(n, k) mod p as a product of digit binomials.
inline std::int64_t binomial_mod_p(std::int64_t n, std::int64_t k, std::int64_t p) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  while (n || k) {
    std::int64_t a = n % p, b = k % p;
    if (b > a) return 0;
    r = detail::mulmod(r, static_cast<std::int64_t>(binomial_exact(a, b) % p), p);
    n /= p;
    k /= p;
  }
  return r;
}

inline Elem Field::binomial(std::int64_t n, std::int64_t k) const {
  if (d_->p == 0) return from_integer(binomial_exact(n, k));
  return from_int(binomial_mod_p(n, k, d_->p));
}

inline std::vector<Elem> Field::elements() const {
  if (d_->p == 0) fail(ErrorKind::InfiniteEnumeration, "QQ is infinite");
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(d_->q));
  for (std::int64_t c = 0; c < d_->q; ++c) out.emplace_back(d_, c);
  return out;
}

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\n\r");
  return s.substr(a, b - a + 1);
}

inline std::int64_t parse_int(const std::string& s, const char* what) {
  std::string t = strip(s);
  if (t.empty()) fail(ErrorKind::ParseError, std::string("empty ") + what);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (...) {
    fail(ErrorKind::ParseError, std::string("bad ") + what + " '" + t + "'");
  }
  if (pos != t.size()) fail(ErrorKind::ParseError, std::string("bad ") + what + " '" + t + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline Field Field::parse(const std::string& text) {
  std::string t = detail::strip(text);
  if (t == "QQ" || t == "Q") return rationals();
  if (t.size() < 5 || t.compare(0, 3, "GF(") != 0 || t.back() != ')') {
    fail(ErrorKind::ParseError, "field spec must be QQ or GF(...): '" + text + "'");
  }
  std::string inner = t.substr(3, t.size() - 4);
  std::optional<std::vector<std::int64_t>> modulus;
  auto semi = inner.find(';');
  if (semi != std::string::npos) {
    std::vector<std::int64_t> m;
    for (const auto& part : detail::split(inner.substr(semi + 1), ',')) m.push_back(detail::parse_int(part, "modulus coefficient"));
    m.push_back(1);
    modulus = m;
    inner = inner.substr(0, semi);
  }
  auto caret = inner.find('^');
  std::int64_t p = 0;
  int k = 1;
  if (caret != std::string::npos) {
    p = detail::parse_int(inner.substr(0, caret), "characteristic");
    k = static_cast<int>(detail::parse_int(inner.substr(caret + 1), "degree"));
  } else {
    std::int64_t q = detail::parse_int(inner, "field order");
    if (q < 2) fail(ErrorKind::NonPrimeCharacteristic, "field order must be at least 2");
    auto fs = detail::prime_factors(q);
    if (fs.size() != 1) fail(ErrorKind::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
    p = fs[0];
    k = 0;
    for (std::int64_t x = q; x > 1; x /= p) ++k;
  }
  if (modulus && static_cast<int>(modulus->size()) != k + 1) {
    fail(ErrorKind::ModulusDegreeMismatch, "expected " + std::to_string(k) + " modulus coefficients");
  }
  return make(p, k, modulus);
}

inline Elem Field::parse_element(const std::string& text) const {
  std::string t = detail::strip(text);
  if (d_->p == 0) {
    auto slash = t.find('/');
    if (slash == std::string::npos) return from_integer(Integer(detail::parse_int(t, "rational")));
    Integer n(detail::parse_int(t.substr(0, slash), "numerator"));
    Integer d(detail::parse_int(t.substr(slash + 1), "denominator"));
    if (d == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    return Elem(d_, Rational(n, d));
  }
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') fail(ErrorKind::ParseError, "unterminated coefficient list");
    std::string body = t.substr(1, t.size() - 2);
    std::vector<std::int64_t> coeffs;
    if (!detail::strip(body).empty()) {
      for (const auto& part : detail::split(body, ',')) coeffs.push_back(detail::parse_int(part, "coefficient"));
    }
    if (static_cast<int>(coeffs.size()) > d_->k) fail(ErrorKind::ParseError, "too many coefficients");
    Elem r = zero();
    Elem x = generator();
    Elem xp = one();
    for (auto c : coeffs) {
      r += from_int(c) * xp;
      xp *= x;
    }
    return r;
  }
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    return from_int(detail::parse_int(t.substr(0, slash), "numerator")) /
           from_int(detail::parse_int(t.substr(slash + 1), "denominator"));
  }
  return from_int(detail::parse_int(t, "element"));
}

inline Field make_field(std::int64_t characteristic, int degree = 1,
                        std::optional<std::vector<std::int64_t>> modulus = std::nullopt) {
  return Field::make(characteristic, degree, std::move(modulus));
}

// Univariate polynomial over a field, in the indeterminate gamma.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(f) {}
  Poly(Field f, std::vector<Elem> coeffs) : f_(f), c_(std::move(coeffs)) {
    for (const auto& e : c_) {
      if (e.data() != f_.data()) fail(ErrorKind::FieldMismatch, "coefficient from another field");
    }
    normalize();
  }
  static Poly constant(const Elem& e) { return Poly(e.field(), {e}); }
  static Poly gamma(Field f) { return Poly(f, {f.zero(), f.one()}); }
  static Poly monomial(const Elem& c, int deg) {
    std::vector<Elem> v(static_cast<std::size_t>(deg) + 1, c.field().zero());
    v[deg] = c;
    return Poly(c.field(), std::move(v));
  }

  Field field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : f_.zero(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Elem eval(const Elem& x) const {
    if (x.data() != f_.data()) fail(ErrorKind::FieldMismatch, "evaluation point from another field");
    Elem r = f_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check(a, b);
    if (a.c_.empty()) return b;
    if (b.c_.empty()) return a;
    Poly r(a.f_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (i < a.c_.size() && i < b.c_.size()) r.c_[i] = a.c_[i] + b.c_[i];
      else r.c_[i] = i < a.c_.size() ? a.c_[i] : b.c_[i];
    }
    r.normalize();
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& e : r.c_) e = -e;
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check(a, b);
    Poly r(a.f_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, a.f_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // True iff some point of the (finite) field is not a root.
  bool nonvanishing_on_field() const {
    if (c_.empty()) return false;
    if (!f_.is_finite() || degree() < f_.order()) return true;
    for (const auto& x : f_.elements()) {
      if (!eval(x).is_zero()) return true;
    }
    return false;
  }

  // e.g. "1 + 3g^2"; `var` names the indeterminate.
  std::string to_string(const std::string& var = "g") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      std::string cs = c_[i].to_string();
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << cs;
      } else {
        if (!c_[i].is_one()) os << cs;
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  static void check(const Poly& a, const Poly& b) {
    if (a.f_ != b.f_) fail(ErrorKind::FieldMismatch, "polynomials over different fields");
  }
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Field f_;
  std::vector<Elem> c_;
};

// Coefficient-ring adaptor used by generic code: Elem (numeric) or Poly (symbolic gamma).
template <class S>
struct Ring;

template <>
struct Ring<Elem> {
  Field F;
  Elem zero() const { return F.zero(); }
  Elem one() const { return F.one(); }
  Elem from_int(std::int64_t n) const { return F.from_int(n); }
  Elem lift(const Elem& e) const { return e; }
  Elem binomial(std::int64_t n, std::int64_t k) const { return F.binomial(n, k); }
};

template <>
struct Ring<Poly> {
  Field F;
  Poly zero() const { return Poly(F); }
  Poly one() const { return Poly::constant(F.one()); }
  Poly from_int(std::int64_t n) const { return Poly::constant(F.from_int(n)); }
  Poly lift(const Elem& e) const { return Poly::constant(e); }
  Poly binomial(std::int64_t n, std::int64_t k) const { return Poly::constant(F.binomial(n, k)); }
};

inline std::string scalar_string(const Elem& e) { return e.to_string(); }
inline std::string scalar_string(const Poly& p) { return p.to_string(); }

// a is a carry-free summand of l in base p: a <= l and digitwise a <= l.
inline bool carry_free_summand(std::int64_t a, std::int64_t l, std::int64_t p) {
  if (a < 0 || a > l) return false;
  while (a || l) {
    if (a % p > l % p) return false;
    a /= p;
    l /= p;
  }
  return true;
}

// The sum of the parts has no carries in base p (Lucas: multinomial nonzero mod p).
inline bool multinomial_nonzero_mod_p(const std::vector<std::int64_t>& parts, std::int64_t p) {
  std::vector<std::int64_t> xs = parts;
  bool any = true;
  while (any) {
    any = false;
    std::int64_t digit_sum = 0;
    for (auto& x : xs) {
      digit_sum += x % p;
      x /= p;
      if (x) any = true;
    }
    if (digit_sum > p - 1) return false;
  }
  return true;
}

}  // namespace plethysm
