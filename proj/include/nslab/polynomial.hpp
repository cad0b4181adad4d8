// Dense integer polynomials and cyclotomic polynomials.

#ifndef NSLAB_POLYNOMIAL_HPP_
#define NSLAB_POLYNOMIAL_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace nslab {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient i multiplies z^i. The zero polynomial has no coefficients;
// otherwise the leading coefficient is nonzero.
template <typename T = BigInt>
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;

  explicit IntegerPolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static IntegerPolynomial monomial(std::size_t degree, T coeff = 1) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = std::move(coeff);
    return IntegerPolynomial(std::move(c));
  }

  bool is_zero() const noexcept {
    return c_.empty();
  }

  // -1 for the zero polynomial
  long degree() const noexcept {
    return static_cast<long>(c_.size()) - 1;
  }

  std::vector<T> const& coefficients() const noexcept {
    return c_;
  }

  T coefficient(std::size_t i) const {
    return i < c_.size() ? c_[i] : T(0);
  }

  T const& leading() const {
    return c_.back();
  }

  bool is_monic() const {
    return !c_.empty() && c_.back() == 1;
  }

  T value_at_one() const {
    T s = 0;
    for (auto const& x : c_) {
      s += x;
    }
    return s;
  }

  friend bool operator==(IntegerPolynomial const&,
                         IntegerPolynomial const&) = default;

  friend IntegerPolynomial operator+(IntegerPolynomial const& a,
                                     IntegerPolynomial const& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      c[i] += a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      c[i] += b.c_[i];
    }
    return IntegerPolynomial(std::move(c));
  }

  friend IntegerPolynomial operator-(IntegerPolynomial const& a,
                                     IntegerPolynomial const& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      c[i] += a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      c[i] -= b.c_[i];
    }
    return IntegerPolynomial(std::move(c));
  }

  friend IntegerPolynomial operator*(IntegerPolynomial const& a,
                                     IntegerPolynomial const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return IntegerPolynomial(std::move(c));
  }

  // Quotient and remainder by a monic divisor.
  std::pair<IntegerPolynomial, IntegerPolynomial> divmod(
      IntegerPolynomial const& d) const {
    if (!d.is_monic()) {
      throw InvalidInput("IntegerPolynomial::divmod: divisor must be monic");
    }
    if (degree() < d.degree()) {
      return {IntegerPolynomial(), *this};
    }
    std::vector<T>    r  = c_;
    std::size_t const dd = d.c_.size() - 1;
    std::vector<T>    q(r.size() - dd, T(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      T const t = r[k + dd];
      if (t == 0) {
        continue;
      }
      q[k] = t;
      for (std::size_t i = 0; i <= dd; ++i) {
        r[k + i] -= t * d.c_[i];
      }
    }
    r.resize(dd);
    return {IntegerPolynomial(std::move(q)), IntegerPolynomial(std::move(r))};
  }

  // The quotient when the monic `d` divides exactly.
  std::optional<IntegerPolynomial> exact_divide(
      IntegerPolynomial const& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) {
      return std::nullopt;
    }
    return q;
  }

  // Human-readable form in the variable z, constant term first.
  std::string to_string(char var = 'z') const {
    if (c_.empty()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      T v = c_[i];
      if (v == 0) {
        continue;
      }
      bool neg = v < 0;
      if (neg) {
        v = -v;
      }
      if (first) {
        os << (neg ? "-" : "");
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      if (i == 0 || v != 1) {
        os << v;
      }
      if (i >= 1) {
        os << var;
      }
      if (i >= 2) {
        os << '^' << i;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) {
      c_.pop_back();
    }
  }

  std::vector<T> c_;
};

using Polynomial = IntegerPolynomial<BigInt>;

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) {
        n /= p;
      }
      result -= result / p;
    }
  }
  if (n > 1) {
    result -= result / n;
  }
  return result;
}

inline int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) {
        return 0;
      }
      sign = -sign;
    }
  }
  return n > 1 ? -sign : sign;
}

// Phi_d(z). For d >= 2, Phi_d = prod_{k | d} (1 - z^k)^{mu(d/k)}, evaluated
// as a power series truncated at degree phi(d).
inline Polynomial cyclotomic(std::uint64_t d) {
  if (d == 0) {
    throw InvalidInput("cyclotomic: d must be positive");
  }
  if (d == 1) {
    return Polynomial({BigInt(-1), BigInt(1)});
  }
  std::size_t const N = euler_phi(d);
  std::vector<BigInt> s(N + 1, BigInt(0));
  s[0] = 1;
  for (std::uint64_t k = 1; k <= d; ++k) {
    if (d % k != 0) {
      continue;
    }
    int const mu = mobius(d / k);
    if (mu == 1) {
      // multiply by (1 - z^k)
      for (std::size_t i = N + 1; i-- > k;) {
        s[i] -= s[i - k];
      }
    } else if (mu == -1) {
      // divide by (1 - z^k), i.e. multiply by 1 + z^k + z^2k + ...
      for (std::size_t i = k; i <= N; ++i) {
        s[i] += s[i - k];
      }
    }
  }
  return Polynomial(std::move(s));
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      return false;
    }
  }
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) {
      r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % p);
    }
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

// A prime p = 1 (mod d) and an element of multiplicative order exactly d.
// Phi_d(omega) = 0 (mod p), so Phi_d | P forces P(omega) = 0 (mod p).
struct RootOfUnityModP {
  std::uint64_t p;
  std::uint64_t omega;
};

inline RootOfUnityModP root_of_unity_mod_p(std::uint64_t d) {
  std::vector<std::uint64_t> primes_of_d;
  for (std::uint64_t n = d, q = 2; n > 1; ++q) {
    if (q * q > n) {
      primes_of_d.push_back(n);
      break;
    }
    if (n % q == 0) {
      primes_of_d.push_back(q);
      while (n % q == 0) {
        n /= q;
      }
    }
  }
  for (std::uint64_t k = 1;; ++k) {
    std::uint64_t const p = k * d + 1;
    if (p < 3 || !is_prime_u64(p)) {
      continue;
    }
    for (std::uint64_t a = 2; a < p; ++a) {
      std::uint64_t const w  = pow_mod(a, (p - 1) / d, p);
      bool                ok = w != 1 || d == 1;
      for (std::uint64_t q : primes_of_d) {
        ok = ok && pow_mod(w, d / q, p) != 1;
      }
      if (ok) {
        return {p, w};
      }
    }
  }
}

// Phi_d, phi(d) and roots of unity for repeated use; not thread-safe, use
// one per thread.
class CyclotomicCache {
 public:
  Polynomial const& get(std::uint64_t d) {
    auto it = poly_.find(d);
    if (it == poly_.end()) {
      it = poly_.emplace(d, cyclotomic(d)).first;
    }
    return it->second;
  }

  RootOfUnityModP const& root(std::uint64_t d) {
    auto it = root_.find(d);
    if (it == root_.end()) {
      it = root_.emplace(d, root_of_unity_mod_p(d)).first;
    }
    return it->second;
  }

  // phi(k) for 0 <= k <= n
  std::vector<std::uint64_t> const& phi_table(std::uint64_t n) {
    if (phi_.size() <= n) {
      phi_.resize(n + 1);
      for (std::uint64_t k = 0; k <= n; ++k) {
        phi_[k] = k;
      }
      for (std::uint64_t k = 2; k <= n; ++k) {
        if (phi_[k] == k) {
          for (std::uint64_t m = k; m <= n; m += k) {
            phi_[m] -= phi_[m] / k;
          }
        }
      }
    }
    return phi_;
  }

 private:
  std::map<std::uint64_t, Polynomial>      poly_;
  std::map<std::uint64_t, RootOfUnityModP> root_;
  std::vector<std::uint64_t>               phi_;
};

}  // namespace nslab

#endif  // NSLAB_POLYNOMIAL_HPP_
