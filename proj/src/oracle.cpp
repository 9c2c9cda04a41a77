#include "seqpipe/oracle.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>

#include "seqpipe/errors.hpp"

namespace seqpipe {

namespace {

mpz_class factorial(long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

/// Binomial coefficient extended to negative upper index; zero for k < 0.
mpz_class binom(long n, long k) {
  if (k < 0) return 0;
  mpz_class out;
  if (n >= 0) {
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  }
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k - n - 1),
               static_cast<unsigned long>(k));
  return k % 2 == 0 ? out : mpz_class(-out);
}

mpz_class ipow(long base, long e) {
  mpz_class out;
  mpz_class b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

/// S(n, k) = (1/k!) sum_j (-1)^(k-j) C(k, j) j^n.
mpz_class stirling2(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class sum = 0;
  for (long j = 0; j <= k; ++j) {
    const mpz_class term = binom(k, j) * ipow(j, n);
    if ((k - j) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / factorial(k);
}

mpz_class eulerian1(long n, long k) {
  mpz_class sum = 0;
  for (long j = 0; j <= k; ++j) {
    const mpz_class term = binom(n + 1, j) * ipow(k + 1 - j, n);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

mpz_class double_factorial_odd(long k) {  // (2k - 1)!!
  mpz_class out = 1;
  for (long i = 1; i <= 2 * k - 1; i += 2) out *= i;
  return out;
}

mpz_class a096078(long n, long k) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, mpz_class> memo;
  if (k < 0 || k > n) return 0;
  if (n == 0) return 1;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
  }
  const mpz_class v = (k + 1) * a096078(n - 1, k) + (n - k + 1) * a096078(n, k - 1);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(std::make_pair(n, k), v);
  return v;
}

FieldElem q(const mpz_class& num, const mpz_class& den) {
  mpq_class v(num, den);
  v.canonicalize();
  return FieldElem(v);
}

}  // namespace

const std::vector<std::string>& oracle_names() {
  static const std::vector<std::string> names = {
      "N1",      "N2",      "N3",         "E1",      "E2",
      "E3",      "stirling2", "A019538",  "A086810", "A028246ext",
      "A130850", "A090582signed", "galton", "A096078", "etude2_seq"};
  return names;
}

FieldElem oracle(std::string_view name, long n, long k) {
  bool known = false;
  for (const auto& s : oracle_names()) known = known || s == name;
  if (!known) raise(ErrorKind::UnknownOracle, "no oracle named '" + std::string(name) + "'");
  if (n < 0 || k < 0 || k > n) {
    raise(ErrorKind::IndexRange, std::string(name) + "(" + std::to_string(n) + ", " +
                                     std::to_string(k) + ") is outside 0 <= k <= n");
  }
  if (name == "N1") return q(binom(n, k) * binom(n - 1, k), k + 1);
  if (name == "N2") return q(binom(n - 1, n - k) * binom(n, k), n - k + 1);
  if (name == "N3") return q(binom(n + 1, k) * binom(n, k), k + 1);
  if (name == "E1") return FieldElem(eulerian1(n, k));
  if (name == "E2") return FieldElem(eulerian1(n, n - k));
  if (name == "E3") return FieldElem(eulerian1(n + 1, k));
  if (name == "stirling2") return FieldElem(stirling2(n, k));
  if (name == "A019538") return FieldElem(mpz_class(factorial(k) * stirling2(n, k)));
  if (name == "A086810") return q(binom(n - 1, n - k) * binom(n + k, k), n + 1);
  if (name == "A028246ext") {
    if (n == 0) return FieldElem(1);
    return k == 0 ? FieldElem() : FieldElem(mpz_class(factorial(k - 1) * stirling2(n, k)));
  }
  if (name == "A130850") {
    mpz_class sum = 0;
    for (long i = 0; i <= n - k; ++i) {
      const mpz_class term = binom(n - k, i) * ipow(i + 1, n);
      if ((n - i - k) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    return FieldElem(sum);
  }
  if (name == "A090582signed") {
    const mpz_class v = factorial(n - k) * stirling2(n, n - k);
    return FieldElem(k % 2 == 0 ? v : mpz_class(-v));
  }
  if (name == "galton") return FieldElem(mpz_class(double_factorial_odd(k) * ipow(2, n - k) * stirling2(n, k)));
  if (name == "A096078") return FieldElem(a096078(n, k));
  // etude2_seq: coefficient of r^k in a_n(r)
  if (2 * k > n) return FieldElem();
  return FieldElem(mpz_class(binom(n - k - 1, n - 2 * k) * ipow(2, n - 2 * k)));
}

}  // namespace seqpipe
