#include "latmut/ehrhart.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace latmut {

namespace {

std::mutex cache_mutex;
std::map<std::string, std::vector<Int>> count_cache;

Int binom(int n, int k) {
    Int b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

}  // namespace

std::vector<Int> ehrhart_counts(const RationalPolytope& Q, const Int& m_max) {
    const std::string key = Q.key();
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = count_cache.find(key);
        if (it != count_cache.end() && Int(it->second.size()) > m_max) {
            return std::vector<Int>(it->second.begin(),
                                    it->second.begin() + static_cast<long>(to_ll(m_max)) + 1);
        }
    }
    if (Q.vertices.empty()) throw std::invalid_argument("ehrhart: unbounded or empty polytope");
    std::vector<Int> counts;
    for (Int m = 0; m <= m_max; ++m) counts.push_back(dilated_point_count(Q, m));
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto& slot = count_cache[key];
        if (slot.size() < counts.size()) slot = counts;
    }
    return counts;
}

DeltaVector delta_vector(const RationalPolytope& Q) {
    const int n = Q.dim;
    const Int r = Q.r;
    const long len = to_ll(r * (n + 1));
    const long checked = 2 * len;
    std::vector<Int> counts = ehrhart_counts(Q, checked);

    // Multiply the truncated count series by (1 - t^r)^{n+1}.
    std::vector<Int> delta(checked + 1, Int(0));
    const long rl = to_ll(r);
    for (long i = 0; i <= checked; ++i) {
        Int acc = 0;
        for (int j = 0; j <= n + 1; ++j) {
            long idx = i - j * rl;
            if (idx < 0) break;
            Int term = binom(n + 1, j) * counts[idx];
            acc += (j % 2) ? -term : term;
        }
        delta[i] = acc;
    }
    for (long i = len; i <= checked; ++i)
        if (delta[i] != 0)
            throw std::logic_error("delta_vector: series identity violated (counting bug)");
    DeltaVector d;
    d.r = r;
    d.n = n;
    d.deltas.assign(delta.begin(), delta.begin() + len);
    for (const auto& x : d.deltas)
        if (x < 0) throw std::logic_error("delta_vector: negative coefficient (counting bug)");
    return d;
}

bool is_palindromic(const DeltaVector& d) {
    long hi = static_cast<long>(d.deltas.size()) - 1;
    while (hi >= 0 && d.deltas[hi] == 0) --hi;
    for (long i = 0, j = hi; i < j; ++i, --j)
        if (d.deltas[i] != d.deltas[j]) return false;
    return true;
}

Int quasi_period(const RationalPolytope& Q) {
    const int n = Q.dim;
    const Int r = Q.r;
    const long m_max = to_ll(2 * r * (n + 1));
    std::vector<Int> counts = ehrhart_counts(Q, m_max);

    auto fits = [&](long p) {
        // Degree-n polynomial on each residue class mod p iff the (n+1)-st
        // finite differences along each class vanish.
        for (long rho = 0; rho < p; ++rho) {
            std::vector<Int> cls;
            for (long m = rho; m <= m_max; m += p) cls.push_back(counts[m]);
            if (static_cast<long>(cls.size()) <= n + 1) continue;
            for (int d = 0; d <= n; ++d)
                for (std::size_t i = 0; i + 1 < cls.size(); ++i) cls[i] = cls[i + 1] - cls[i];
            for (std::size_t i = 0; i + n + 1 < cls.size() + 0u; ++i)
                if (cls[i] != 0) return false;
        }
        return true;
    };

    const long rl = to_ll(r);
    for (long p = 1; p <= rl; ++p) {
        if (rl % p) continue;
        if (fits(p)) return Int(p);
    }
    return r;
}

}  // namespace latmut
