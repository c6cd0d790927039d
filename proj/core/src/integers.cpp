#include "wps/integers.hpp"

#include <algorithm>
#include <set>

namespace wps {

Int gcd_all(const std::vector<Int>& values) {
    Int g = 0;
    for (const Int& v : values) g = gcd(g, v);
    return g;
}

Int lcm_all(const std::vector<Int>& values) {
    Int l = 1;
    for (const Int& v : values) l = lcm(l, v);
    return l;
}

Int extended_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    // Iterative Euclid keeping Bezout coefficients; result g >= 0.
    Int old_r = a, r = b;
    Int old_x = 1, cur_x = 0;
    Int old_y = 0, cur_y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_x - q * cur_x;
        old_x = cur_x;
        cur_x = tmp;
        tmp = old_y - q * cur_y;
        old_y = cur_y;
        cur_y = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    x = old_x;
    y = old_y;
    return old_r;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Int p_content(const Int& value, const Int& p) {
    if (value == 0) throw std::invalid_argument("p-content undefined at zero");
    if (!is_prime(p)) throw std::invalid_argument("p-content requires a prime");
    Int v = abs(value);
    Int content = 1;
    while (v % p == 0) {
        v /= p;
        content *= p;
    }
    return content;
}

int p_valuation(const Int& value, const Int& p) {
    if (value == 0) throw std::invalid_argument("p-content undefined at zero");
    if (!is_prime(p)) throw std::invalid_argument("p-content requires a prime");
    Int v = abs(value);
    int k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize requires a positive integer");
    std::vector<std::pair<Int, int>> factors;
    Int v = n;
    auto extract = [&](const Int& p) {
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
    };
    extract(2);
    for (Int d = 3; d * d <= v; d += 2) extract(d);
    if (v > 1) factors.emplace_back(v, 1);
    return factors;
}

std::vector<Int> primes_dividing(const std::vector<Int>& values) {
    std::set<Int> primes;
    for (const Int& v : values) {
        if (v == 0) continue;
        for (const auto& [p, e] : factorize(abs(v))) primes.insert(p);
    }
    return std::vector<Int>(primes.begin(), primes.end());
}

std::string to_string(const Int& v) { return v.str(); }

}  // namespace wps
