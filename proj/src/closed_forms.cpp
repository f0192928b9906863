#include "unicyclic/closed_forms.hpp"

namespace unicyclic {
namespace closed_form {

BigInt fibonacci(long long n) {
  if (n < 0) throw error(errc::out_of_range, "fibonacci");
  if (n == 0) return 0;
  BigInt a = 0, b = 1;  // F_0 = 0, F_1 = 1
  for (long long i = 1; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return b;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

BigInt nk_path(long long n, long long k) {
  if (k < 1 || k > n) throw error(errc::out_of_range, "nk_path");
  return n - k + 1;
}

BigInt nk_cycle(long long n, long long k) {
  if (k < 1 || k > n || n < 3) throw error(errc::out_of_range, "nk_cycle");
  return n;
}

BigInt nk_star(long long n, long long k) {
  if (k < 2 || k > n) throw error(errc::out_of_range, "nk_star");
  return binomial(n - 1, k - 1);
}

namespace {

long long arg(const std::vector<long long>& params, size_t i) {
  if (i >= params.size()) throw error(errc::out_of_range, "missing parameter");
  return params[i];
}

}  // namespace

BigInt value(const std::string& family, const std::vector<long long>& params) {
  if (family == "n_path") {
    long long n = arg(params, 0);
    if (n < 1) throw error(errc::out_of_range, "n_path: n >= 1");
    return (BigInt(n) * n + n + 2) / 2;
  }
  if (family == "n_cycle") {
    long long n = arg(params, 0);
    if (n < 3) throw error(errc::out_of_range, "n_cycle: n >= 3");
    return BigInt(n) * n + 1;
  }
  if (family == "n_star") {
    long long n = arg(params, 0);
    if (n < 1) throw error(errc::out_of_range, "n_star: n >= 1");
    return (BigInt(1) << (n - 1)) + n;
  }
  if (family == "n_us") {
    long long n = arg(params, 0);
    if (n < 4) throw error(errc::out_of_range, "n_us: n >= 4");
    return (BigInt(1) << (n - 1)) + (BigInt(1) << (n - 2)) + n + 1;
  }
  if (family == "n_up_inline") {
    long long n = arg(params, 0);
    if (n < 4) throw error(errc::out_of_range, "n_up_inline: n >= 4");
    return (BigInt(n) * n + 7 * n - 16) / 2;
  }
  if (family == "n_u1_pair") {
    long long l1 = arg(params, 0), l2 = arg(params, 1);
    if (l1 < 3 || l2 < 1) throw error(errc::out_of_range, "n_u1_pair: l1 >= 3, l2 >= 1");
    long long n = l1 + l2;
    return (BigInt(n) * n + n + 2) / 2 +
           (BigInt(l1) * l1 * l2 - BigInt(l1) * l2 + BigInt(l1) * l1 - l1) / 2;
  }
  if (family == "rooted_u1_pair") {
    long long l1 = arg(params, 0), l2 = arg(params, 1);
    if (l1 < 3 || l2 < 1) throw error(errc::out_of_range, "rooted_u1_pair");
    return BigInt(l2 + 1) * (l1 + 1) * l1 / 2;
  }
  if (family == "sigma_path") {
    long long n = arg(params, 0);
    if (n < 0) throw error(errc::out_of_range, "sigma_path: n >= 0");
    return fibonacci(n + 2);
  }
  if (family == "hosoya_path") {
    long long n = arg(params, 0);
    if (n < 0) throw error(errc::out_of_range, "hosoya_path: n >= 0");
    return fibonacci(n + 1);
  }
  if (family == "fibonacci") return fibonacci(arg(params, 0));
  throw error(errc::unknown_family, family);
}

}  // namespace closed_form
}  // namespace unicyclic
