#include "tilecalc/oracles.hpp"

#include <boost/integer/common_factor.hpp>

namespace tilecalc::oracle {

BigUint oracle_divide_fixed(const BigUint& p, const BigUint& q, unsigned f) {
    if (q == 0) throw OracleError("division by zero");
    BigUint scaled = p << f;
    return scaled / q;
}

BigUint oracle_isqrt_fixed(const BigUint& n, unsigned) {
    if (n == 0) return 0;
    // Restoring recurrence: one root bit per pair of input bits.
    unsigned top = static_cast<unsigned>(msb(n));
    unsigned shift = top & ~1u;
    BigUint rem = 0;
    BigUint root = 0;
    for (int s = static_cast<int>(shift); s >= 0; s -= 2) {
        rem = (rem << 2) | ((n >> s) & 3);
        root <<= 1;
        BigUint trial = (root << 1) | 1;
        if (rem >= trial) {
            rem -= trial;
            root |= 1;
        }
    }
    return root;
}

PeriodInfo oracle_binary_period(const BigUint& p, const BigUint& q) {
    if (q == 0) throw OracleError("division by zero");
    if (p == 0 || p >= q) throw OracleError("expected 0 < p < q");
    BigUint g = boost::integer::gcd(p, q);
    BigUint d = q / g;
    std::size_t v = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++v;
    }
    PeriodInfo info;
    if (d == 1) {
        info.terminated = true;
        return info;
    }
    std::size_t order = 1;
    BigUint r = 2 % d;
    while (r != 1) {
        r = (r * 2) % d;
        ++order;
    }
    info.period_start = v;
    info.period_length = order;
    return info;
}

BigUint oracle_pi_partial(unsigned terms, unsigned f) {
    BigUint one = BigUint(1) << f;
    BigUint plus = 0;
    BigUint minus = 0;
    for (unsigned n = 0; n < terms; ++n) {
        BigUint term = one / (2 * n + 1);
        if (n % 2 == 0)
            plus += term;
        else
            minus += term;
    }
    return 4 * (plus - minus);
}

Relation oracle_compare(const Bits& a, const Bits& b) {
    if (a.size() != b.size()) throw OracleError("width mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? Relation::less : Relation::greater;
    }
    return Relation::equal;
}

Bits oracle_shift(const Bits& a) {
    if (a.empty()) return a;
    Bits out(a.size(), 0);
    for (std::size_t i = 1; i < a.size(); ++i) out[i] = a[i - 1];
    return out;
}

SubShift oracle_subshift(const Bits& a, const Bits& b) {
    if (a.size() != b.size()) throw OracleError("width mismatch");
    if (oracle_compare(a, b) == Relation::less) throw OracleError("subtraction underflow");
    Bits diff(a.size(), 0);
    int borrow = 0;
    for (std::size_t k = a.size(); k-- > 0;) {
        int v = int(a[k]) - int(b[k]) - borrow;
        borrow = v < 0;
        diff[k] = static_cast<std::uint8_t>(v & 1);
    }
    return {diff, oracle_shift(b)};
}

Bits oracle_insert(const Bits& q, std::size_t i, std::uint8_t c) {
    if (i < 1 || i + 1 > q.size()) throw OracleError("insert position out of range");
    // Positions count from 1 at the most significant bit.
    auto at = q.begin() + static_cast<std::ptrdiff_t>(i - 1);
    Bits out(q.begin(), at);
    out.push_back(c);
    out.insert(out.end(), at, q.end() - 1);
    return out;
}

}  // namespace tilecalc::oracle
